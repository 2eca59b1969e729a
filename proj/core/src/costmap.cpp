#include "rootex/costmap.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "rootex/sphere.hpp"

namespace rootex {

namespace {

// Prefix-tested sphere growth at one voxel. The denominator is the full
// sphere cardinality |phi_r|; clipped positions count as unfilled.
template <typename T>
int radius_at(const Grid3<T>& vol, Vec3i p, double threshold, double fill_ratio,
              int max_radius) {
  std::int64_t hits = 0;
  std::int64_t phi = 0;
  for (int r = 0; r <= max_radius; ++r) {
    const SphereMask& shell = sphere_shell(r);
    phi += std::int64_t(shell.offsets.size());
    for (const Vec3i& o : shell.offsets) {
      const Vec3i q = p + o;
      if (vol.in_bounds(q) && double(vol(q)) >= threshold) ++hits;
    }
    if (double(hits) / double(phi) < fill_ratio) return r == 0 ? 0 : r - 1;
  }
  return max_radius;
}

template <typename T>
VolumeI radius_map_impl(const Grid3<T>& vol, double threshold, double fill_ratio,
                        int threads) {
  if (fill_ratio <= 0.0 || fill_ratio > 1.0)
    throw InputError("radius_map: fill ratio must be in (0,1]");
  VolumeI out(vol.nx(), vol.ny(), vol.nz(), 0);
  // A sphere this large always contains the whole volume boundary, so the
  // fill test must already have failed.
  const int max_radius = vol.nx() + vol.ny() + vol.nz();
  detail::parallel_for(std::int64_t(vol.size()), threads,
                       [&](std::int64_t lo, std::int64_t hi) {
                         for (std::int64_t i = lo; i < hi; ++i) {
                           const Vec3i p = vol.position(std::size_t(i));
                           out[std::size_t(i)] =
                               radius_at(vol, p, threshold, fill_ratio, max_radius);
                         }
                       });
  return out;
}

}  // namespace

VolumeI radius_map(const VolumeF& vol, double threshold, double fill_ratio,
                   int threads) {
  return radius_map_impl(vol, threshold, fill_ratio, threads);
}

VolumeI radius_map(const VolumeU8& vol, double threshold, double fill_ratio,
                   int threads) {
  return radius_map_impl(vol, threshold, fill_ratio, threads);
}

VolumeF cost_map_seg(const VolumeF& seg, const ExtractionConfig& cfg) {
  const VolumeI rad = radius_map(seg, cfg.gamma, cfg.fill_ratio_seg, cfg.threads);
  const std::int32_t max_r = *std::max_element(rad.data(), rad.data() + rad.size());

  VolumeF c_inv(seg.nx(), seg.ny(), seg.nz());
  double max_inv = 0.0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const double radius_term =
        max_r > 0 ? cfg.w_rad * double(rad[i]) / double(max_r) : 0.0;
    const double v = double(seg[i]) + radius_term;
    c_inv[i] = float(v);
    max_inv = std::max(max_inv, v);
  }
  if (max_inv <= 0.0) throw InputError("empty segmentation: all intensities are zero");

  VolumeF cost(seg.nx(), seg.ny(), seg.nz());
  for (std::size_t i = 0; i < seg.size(); ++i)
    cost[i] = float(1.0 - double(c_inv[i]) / max_inv + cfg.epsilon);
  return cost;
}

VolumeF cost_map_gap(const VolumeF& seg, const VolumeF& c_seg,
                     const ExtractionConfig& cfg) {
  if (!seg.same_dims(c_seg)) throw InputError("cost_map_gap: dimension mismatch");
  VolumeF out(seg.nx(), seg.ny(), seg.nz());
  for (std::size_t i = 0; i < seg.size(); ++i)
    out[i] = double(seg[i]) < cfg.gamma ? float(cfg.gap_penalty * double(c_seg[i]))
                                        : c_seg[i];
  return out;
}

VolumeI radius_map_lcc(const VolumeU8& lcc, const ExtractionConfig& cfg) {
  return radius_map(lcc, 1.0, cfg.fill_ratio_lcc, cfg.threads);
}

VolumeF cost_map_radius(const VolumeI& r_lcc, const VolumeU8& lcc) {
  if (!r_lcc.same_dims(lcc)) throw InputError("cost_map_radius: dimension mismatch");
  const std::int32_t max_r = *std::max_element(r_lcc.data(), r_lcc.data() + r_lcc.size());
  if (max_r <= 0) throw InputError("empty LCC: no voxel with positive radius");
  VolumeF out(r_lcc.nx(), r_lcc.ny(), r_lcc.nz(), kInf);
  for (std::size_t i = 0; i < r_lcc.size(); ++i)
    if (lcc[i]) out[i] = float(1.0 - double(r_lcc[i]) / double(max_r));
  return out;
}

VolumeF cost_map_relative(const VolumeI& r_lcc, const VolumeU8& lcc, int threads) {
  if (!r_lcc.same_dims(lcc)) throw InputError("cost_map_relative: dimension mismatch");
  bool any = false;
  for (std::size_t i = 0; i < lcc.size(); ++i)
    if (lcc[i]) { any = true; break; }
  if (!any) throw InputError("empty LCC: no voxel with positive radius");

  VolumeF out(r_lcc.nx(), r_lcc.ny(), r_lcc.nz(), kInf);
  detail::parallel_for(
      std::int64_t(r_lcc.size()), threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
          if (!lcc[std::size_t(i)]) continue;
          const Vec3i p = r_lcc.position(std::size_t(i));
          const std::int32_t rp = r_lcc[std::size_t(i)];
          int dominated = 0;
          for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
              for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                const Vec3i q{p.x + dx, p.y + dy, p.z + dz};
                // Out of bounds behaves like background radius 0.
                const std::int32_t rq = r_lcc.in_bounds(q) ? r_lcc(q) : 0;
                if (rp > rq) ++dominated;
              }
          out[std::size_t(i)] = float(1.0 - double(dominated) / 26.0);
        }
      });
  return out;
}

}  // namespace rootex
