#include "rootex/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "rootex/errors.hpp"

namespace rootex {

std::vector<DirectedSample> resample(const RootGraph& g, double spacing) {
  if (!(spacing > 0.0)) throw InputError("resample: spacing must be positive");
  g.validate();

  std::vector<DirectedSample> out;
  DirectedSample root_sample;
  root_sample.pos = g.root().pos;
  out.push_back(root_sample);

  for (int idx : g.preorder()) {
    const RootNode& node = g.nodes[std::size_t(idx)];
    if (node.parent < 0) continue;
    const Vec3d a = g.nodes[std::size_t(node.parent)].pos;
    const Vec3d b = node.pos;
    const double len = dist(a, b);

    Vec3d dir{0, 0, 0};
    const bool has_dir = len > 0.0;
    if (has_dir) dir = (b - a) * (1.0 / len);

    Vec3d prev = a;
    if (len > spacing) {
      // ceil with a tiny relative guard so exact multiples stay exact
      const int steps = std::max(1, int(std::ceil(len / spacing * (1.0 - 1e-12))));
      for (int i = 1; i < steps; ++i) {
        DirectedSample s;
        s.pos = a + dir * (double(i) * spacing);
        s.dir = dir;
        s.has_dir = true;
        s.prev = prev;
        s.has_prev = true;
        out.push_back(s);
        prev = s.pos;
      }
    }
    DirectedSample end;
    end.pos = b;
    end.dir = dir;
    end.has_dir = has_dir;
    end.prev = prev;
    end.has_prev = true;
    out.push_back(end);
  }
  return out;
}

namespace {

bool directions_agree(const DirectedSample& a, const DirectedSample& b) {
  if (!a.has_dir || !b.has_dir) return true;
  return dot(a.dir, b.dir) > 0.0;
}

bool within_tolerance(const DirectedSample& target, const DirectedSample& cand,
                      double point_dist, double tolerance) {
  if (point_dist <= tolerance) return true;
  if (!cand.has_prev) return false;
  return dist_point_segment(target.pos, cand.prev, cand.pos) <= tolerance;
}

double safe_ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : double(num) / double(den);
}

}  // namespace

EvalReport score_samples(const std::vector<DirectedSample>& candidates,
                         const std::vector<DirectedSample>& targets,
                         double tolerance, std::vector<int>* match_out) {
  if (tolerance < 0.0) throw InputError("score: tolerance must be nonnegative");
  std::vector<char> taken(candidates.size(), 0);
  if (match_out) match_out->assign(targets.size(), -1);

  std::int64_t matched = 0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const DirectedSample& target = targets[t];
    int best = -1;
    double best_dist = 0.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (taken[c]) continue;
      const DirectedSample& cand = candidates[c];
      if (!directions_agree(target, cand)) continue;
      const double d = dist(target.pos, cand.pos);
      if (!within_tolerance(target, cand, d, tolerance)) continue;
      if (best < 0 || d < best_dist) {  // ties keep the earlier candidate
        best = int(c);
        best_dist = d;
      }
    }
    if (best >= 0) {
      taken[std::size_t(best)] = 1;
      ++matched;
      if (match_out) (*match_out)[t] = best;
    }
  }

  EvalReport r;
  r.tp = matched;
  r.fp = std::int64_t(candidates.size()) - matched;
  r.fn = std::int64_t(targets.size()) - matched;
  r.precision = safe_ratio(r.tp, r.tp + r.fp);
  r.recall = safe_ratio(r.tp, r.tp + r.fn);
  r.f1 = (r.precision + r.recall) > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

EvalReport score(const RootGraph& extracted, const RootGraph& target,
                 double spacing, double tolerance) {
  const auto l_g = resample(extracted, spacing);
  const auto l_t = resample(target, spacing);
  return score_samples(l_g, l_t, tolerance);
}

}  // namespace rootex
