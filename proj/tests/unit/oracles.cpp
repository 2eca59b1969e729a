#include "oracles.hpp"

#include <queue>
#include <utility>

namespace oracles {

using rootex::Vec3d;
using rootex::Vec3i;
using rootex::VolumeF;
using rootex::VolumeU8;

std::vector<Vec3i> sphere_offsets(int radius) {
  std::vector<Vec3i> out;
  for (int dz = -radius; dz <= radius; ++dz)
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx)
        if (std::int64_t(dx) * dx + std::int64_t(dy) * dy + std::int64_t(dz) * dz <=
            std::int64_t(radius) * radius)
          out.push_back({dx, dy, dz});
  return out;
}

namespace {

std::vector<double> dijkstra_impl(const VolumeF& cost_vol, const VolumeF* seg,
                                  double gamma, Vec3i start, double omega) {
  const std::size_t n = cost_vol.size();
  std::vector<double> cost(n, rootex::kInfD);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  std::vector<std::uint8_t> done(n, 0);

  const std::size_t s = cost_vol.index(start);
  cost[s] = 0.0;
  queue.push({0.0, s});
  while (!queue.empty()) {
    const auto [c, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    const Vec3i pu = cost_vol.position(u);
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const Vec3i pv{pu.x + dx, pu.y + dy, pu.z + dz};
          if (!cost_vol.in_bounds(pv)) continue;
          if (seg && double((*seg)(pv)) < gamma) continue;
          const std::size_t v = cost_vol.index(pv);
          const double step = cost_vol[v];
          if (!(step < rootex::kInfD)) continue;
          const double tentative = c + step;
          if (tentative >= omega) continue;
          if (!done[v] && tentative < cost[v]) {
            cost[v] = tentative;
            queue.push({tentative, v});
          }
        }
  }
  return cost;
}

}  // namespace

std::vector<double> dijkstra_costs(const VolumeF& cost_vol, Vec3i start, double omega) {
  return dijkstra_impl(cost_vol, nullptr, 0.0, start, omega);
}

std::vector<double> dijkstra_costs_restricted(const VolumeF& cost_vol,
                                              const VolumeF& seg, double gamma,
                                              Vec3i start, double omega) {
  return dijkstra_impl(cost_vol, &seg, gamma, start, omega);
}

namespace {

void dp_recurse(const std::vector<Vec3d>& pts, int i, int j, double delta,
                std::vector<int>& kept) {
  if (j - i < 2) return;
  int split = -1;
  double max_dist = 0.0;
  for (int k = i + 1; k < j; ++k) {
    const double d =
        rootex::dist_point_segment(pts[std::size_t(k)], pts[std::size_t(i)],
                                   pts[std::size_t(j)]);
    if (d > max_dist) {
      max_dist = d;
      split = k;
    }
  }
  if (split >= 0 && max_dist > delta) {
    dp_recurse(pts, i, split, delta, kept);
    kept.push_back(split);
    dp_recurse(pts, split, j, delta, kept);
  }
}

}  // namespace

std::vector<int> douglas_peucker(const std::vector<Vec3d>& pts, double delta) {
  std::vector<int> kept{0};
  dp_recurse(pts, 0, int(pts.size()) - 1, delta, kept);
  kept.push_back(int(pts.size()) - 1);
  return kept;
}

std::vector<std::uint8_t> flood_fill26(const VolumeU8& vol, Vec3i start) {
  std::vector<std::uint8_t> seen(vol.size(), 0);
  if (!vol.in_bounds(start) || !vol(start)) return seen;
  std::queue<Vec3i> queue;
  queue.push(start);
  seen[vol.index(start)] = 1;
  while (!queue.empty()) {
    const Vec3i p = queue.front();
    queue.pop();
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const Vec3i q{p.x + dx, p.y + dy, p.z + dz};
          if (!vol.in_bounds(q) || !vol(q) || seen[vol.index(q)]) continue;
          seen[vol.index(q)] = 1;
          queue.push(q);
        }
  }
  return seen;
}

}  // namespace oracles
