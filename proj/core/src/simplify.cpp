#include "rootex/simplify.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace rootex {

namespace {

bool is_fixed(const RootGraph& g, int i) {
  const RootNode& n = g.nodes[std::size_t(i)];
  return i == 0 || n.children.size() != 1;
}

// Marks the chain points Douglas-Peucker keeps. Endpoints always survive.
void douglas_peucker_mark(const std::vector<Vec3d>& pts, double delta,
                          std::vector<char>& keep) {
  keep.assign(pts.size(), 0);
  keep.front() = 1;
  keep.back() = 1;
  std::vector<std::pair<int, int>> stack{{0, int(pts.size()) - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    int split = -1;
    double max_dist = 0.0;
    for (int k = i + 1; k < j; ++k) {
      const double d = dist_point_segment(pts[std::size_t(k)], pts[std::size_t(i)],
                                          pts[std::size_t(j)]);
      if (d > max_dist) {  // strict: deviation ties keep the lower index
        max_dist = d;
        split = k;
      }
    }
    if (split >= 0 && max_dist > delta) {
      keep[std::size_t(split)] = 1;
      stack.push_back({split, j});
      stack.push_back({i, split});
    }
  }
}

}  // namespace

RootGraph simplify_graph(const RootGraph& g, double delta) {
  if (delta < 0.0) throw InputError("simplify_graph: delta must be nonnegative");
  if (g.nodes.empty()) return g;
  g.validate();

  const int n = g.node_count();
  std::vector<char> keep(std::size_t(n), 0);
  for (int i = 0; i < n; ++i)
    if (is_fixed(g, i)) keep[std::size_t(i)] = 1;

  // Each maximal chain runs from a fixed node through single-child interior
  // nodes to the next fixed node.
  for (int i = 0; i < n; ++i) {
    if (!is_fixed(g, i)) continue;
    for (int child : g.nodes[std::size_t(i)].children) {
      std::vector<int> chain{i};
      int cur = child;
      while (!is_fixed(g, cur)) {
        chain.push_back(cur);
        cur = g.nodes[std::size_t(cur)].children.front();
      }
      chain.push_back(cur);
      if (chain.size() < 3) continue;
      std::vector<Vec3d> pts;
      pts.reserve(chain.size());
      for (int idx : chain) pts.push_back(g.nodes[std::size_t(idx)].pos);
      std::vector<char> chain_keep;
      douglas_peucker_mark(pts, delta, chain_keep);
      for (std::size_t k = 0; k < chain.size(); ++k)
        if (chain_keep[k]) keep[std::size_t(chain[k])] = 1;
    }
  }

  // Rebuild in preorder; each kept node hangs off its nearest kept ancestor.
  RootGraph out;
  out.branch_count = g.branch_count;
  std::vector<int> remap(std::size_t(n), -1);
  for (int i : g.preorder()) {
    if (!keep[std::size_t(i)]) continue;
    const RootNode& src = g.nodes[std::size_t(i)];
    int parent = src.parent;
    while (parent >= 0 && !keep[std::size_t(parent)])
      parent = g.nodes[std::size_t(parent)].parent;
    const int new_idx = int(out.nodes.size());
    out.nodes.push_back(RootNode{src.pos, src.radius, src.branch_id, -1, {}});
    remap[std::size_t(i)] = new_idx;
    if (parent >= 0) {
      const int new_parent = remap[std::size_t(parent)];
      out.nodes[std::size_t(new_idx)].parent = new_parent;
      out.nodes[std::size_t(new_parent)].children.push_back(new_idx);
    }
  }
  return out;
}

double max_deviation(const std::vector<Vec3d>& original,
                     const std::vector<Vec3d>& simplified) {
  if (original.empty() || simplified.empty())
    throw InputError("max_deviation: empty chain");
  if (!(original.front() == simplified.front()) ||
      !(original.back() == simplified.back()))
    throw InputError("max_deviation: chains do not share endpoints");

  double worst = 0.0;
  std::size_t si = 0;
  for (const Vec3d& p : original) {
    if (si < simplified.size() && p == simplified[si]) {
      ++si;
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < simplified.size(); ++k)
      best = std::min(best, dist_point_segment(p, simplified[k], simplified[k + 1]));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace rootex
