#include "rootex/pipeline.hpp"

#include <algorithm>
#include <filesystem>

#include "rootex/costmap.hpp"
#include "rootex/lcc.hpp"
#include "rootex/pathfind.hpp"
#include "rootex/simplify.hpp"
#include "rootex/skeleton.hpp"
#include "rootex/sphere.hpp"

namespace rootex {

namespace {

// Single-voxel prefix-tested sphere growth, same rule as radius_map.
int radius_at(const VolumeF& vol, Vec3i p, double threshold, double fill_ratio) {
  const int max_radius = vol.nx() + vol.ny() + vol.nz();
  std::int64_t hits = 0, phi = 0;
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

VolumeF to_float(const VolumeI& v) {
  VolumeF out(v.nx(), v.ny(), v.nz());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = float(v[i]);
  return out;
}

VolumeF field_cost_volume(const PathField& f) {
  VolumeF out(f.nx, f.ny, f.nz);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = float(f.cost[i]);
  return out;
}

}  // namespace

Vec3i auto_start(const VolumeF& seg, const ExtractionConfig& cfg, int top_slices) {
  validate(cfg);
  if (top_slices <= 0) throw InputError("auto_start: top_slices must be positive");
  const int z_end = std::min(top_slices, seg.nz());

  Vec3i best{-1, -1, -1};
  int best_radius = -1;
  for (int z = 0; z < z_end; ++z)
    for (int y = 0; y < seg.ny(); ++y)
      for (int x = 0; x < seg.nx(); ++x) {
        if (double(seg(x, y, z)) < cfg.gamma) continue;
        const int r = radius_at(seg, {x, y, z}, cfg.gamma, cfg.fill_ratio_seg);
        // The scan runs z-major, so radius ties need an explicit
        // lexicographic comparison on (x,y,z).
        if (r > best_radius || (r == best_radius && lex_less(Vec3i{x, y, z}, best))) {
          best_radius = r;
          best = {x, y, z};
        }
      }
  if (best_radius < 0)
    throw InputError(
        "auto_start: no voxel at or above gamma in the top slices; pass --start");
  return best;
}

RootGraph run_extract(const VolumeF& seg, Vec3i start, const ExtractionConfig& cfg,
                      CostKind kind, bool skip_lcc, const std::string& debug_dir) {
  validate(cfg);
  if (!seg.in_bounds(start))
    throw InputError("extract: start point out of bounds");

  const bool dump = !debug_dir.empty();
  if (dump) std::filesystem::create_directories(debug_dir);
  const auto dump_path = [&](const char* name) { return debug_dir + "/" + name; };

  VolumeU8 lcc(seg.nx(), seg.ny(), seg.nz(), 0);
  if (skip_lcc) {
    for (std::size_t i = 0; i < seg.size(); ++i)
      lcc[i] = double(seg[i]) >= cfg.gamma ? 1 : 0;
    if (!lcc(start))
      throw InputError("extract: start point is below gamma (--skip-lcc)");
  } else {
    const VolumeF c_seg = cost_map_seg(seg, cfg);
    const VolumeF c_gap = cost_map_gap(seg, c_seg, cfg);
    if (dump) {
      write_rvol(dump_path("c_seg.rvol"), c_seg);
      write_rvol(dump_path("c_gap.rvol"), c_gap);
    }
    const PathField field = shortest_paths(c_gap, start, cfg);
    if (dump) write_rvol(dump_path("c_tau.rvol"), field_cost_volume(field));
    lcc = extract_lcc(seg, field, cfg);
  }
  if (dump) write_rvol(dump_path("lcc.rvol"), lcc);

  const VolumeI r_lcc = radius_map_lcc(lcc, cfg);
  const VolumeF cost = kind == CostKind::Radius
                           ? cost_map_radius(r_lcc, lcc)
                           : cost_map_relative(r_lcc, lcc, cfg.threads);
  if (dump) {
    write_rvol(dump_path("r_lcc.rvol"), to_float(r_lcc));
    write_rvol(dump_path("skeleton_cost.rvol"), cost);
  }

  SkeletonDebug skel_debug;
  RootGraph g = extract_graph(lcc, r_lcc, cost, start, cfg,
                              dump ? &skel_debug : nullptr);
  if (dump) write_rvol(dump_path("v_occ.rvol"), skel_debug.v_occ);

  if (cfg.delta > 0.0) g = simplify_graph(g, cfg.delta);
  return g;
}

}  // namespace rootex
