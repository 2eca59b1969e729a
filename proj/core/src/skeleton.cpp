#include "rootex/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "parallel.hpp"
#include "rootex/pathfind.hpp"
#include "rootex/sphere.hpp"

namespace rootex {

namespace {

int coordinate(Vec3i p, Axis axis) {
  switch (axis) {
    case Axis::X: return p.x;
    case Axis::Y: return p.y;
    default: return p.z;
  }
}

int dominance_count(const VolumeI& r_lcc, Vec3i p) {
  const std::int32_t rp = r_lcc(p);
  int count = 0;
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        const Vec3i q{p.x + dx, p.y + dy, p.z + dz};
        const std::int32_t rq = r_lcc.in_bounds(q) ? r_lcc(q) : 0;
        if (rp > rq) ++count;
      }
  return count;
}

}  // namespace

QuenchList find_quench_points(const VolumeI& r_lcc, Vec3i start,
                              const ExtractionConfig& cfg) {
  if (!r_lcc.in_bounds(start))
    throw InputError("find_quench_points: start point out of bounds");

  const int workers = cfg.threads > 0 ? cfg.threads : 0;
  const std::int64_t n = std::int64_t(r_lcc.size());
  std::vector<std::vector<Vec3i>> found(1);
  // Parallel scan with per-chunk collection keeps the result order stable.
  const int chunk_count = 64;
  found.assign(chunk_count, {});
  detail::parallel_for(chunk_count, workers, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t c = lo; c < hi; ++c) {
      const std::int64_t begin = n * c / chunk_count;
      const std::int64_t end = n * (c + 1) / chunk_count;
      for (std::int64_t i = begin; i < end; ++i) {
        if (r_lcc[std::size_t(i)] <= 0) continue;  // radius 0 dominates nothing
        const Vec3i p = r_lcc.position(std::size_t(i));
        if (cfg.cut_z && coordinate(p, cfg.cut_axis) < *cfg.cut_z) continue;
        if (dominance_count(r_lcc, p) > cfg.quench_threshold) found[std::size_t(c)].push_back(p);
      }
    }
  });

  QuenchList list;
  for (const auto& part : found)
    list.points.insert(list.points.end(), part.begin(), part.end());
  std::sort(list.points.begin(), list.points.end(), [start](Vec3i a, Vec3i b) {
    const std::int64_t da = dist_sq(a, start);
    const std::int64_t db = dist_sq(b, start);
    if (da != db) return da > db;
    return lex_less(a, b);
  });
  return list;
}

void node_fill(VolumeU8& v_occ, VolumeI& v_node, Vec3i p, double r_lcc_val,
               std::int32_t handle, const ExtractionConfig& cfg) {
  if (!v_occ.in_bounds(p)) throw InputError("node_fill: position out of bounds");
  const int r_dil = int(std::floor(r_lcc_val * cfg.beta));
  for (const Vec3i& o : sphere_mask(r_dil).offsets) {
    const Vec3i q = p + o;
    if (v_occ.in_bounds(q)) v_occ(q) = 1;
  }
  for (const Vec3i& o : sphere_mask(r_dil / 2).offsets) {
    const Vec3i q = p + o;
    if (v_node.in_bounds(q)) v_node(q) = handle;
  }
}

RootGraph extract_graph(const VolumeU8& lcc, const VolumeI& r_lcc,
                        const VolumeF& cost, Vec3i start,
                        const ExtractionConfig& cfg, SkeletonDebug* debug) {
  if (!lcc.same_dims(r_lcc) || r_lcc.nx() != cost.nx() || r_lcc.ny() != cost.ny() ||
      r_lcc.nz() != cost.nz())
    throw InputError("extract_graph: dimension mismatch");
  if (!lcc.in_bounds(start) || !lcc(start))
    throw InputError("extract_graph: start point is not inside the component");

  // Centerline paths: gap closing off, no cost cutoff; infinite-cost voxels
  // (outside the component) stay walls.
  ExtractionConfig path_cfg = cfg;
  path_cfg.gap_len = 0;
  path_cfg.omega = kInfD;
  const PathField field = shortest_paths(cost, start, path_cfg);

  const QuenchList quench = find_quench_points(r_lcc, start, cfg);

  RootGraph g;
  g.nodes.push_back(RootNode{to_vec3d(start), double(r_lcc(start)), 0, -1, {}});

  VolumeU8 v_occ(lcc.nx(), lcc.ny(), lcc.nz(), 0);
  VolumeI v_node(lcc.nx(), lcc.ny(), lcc.nz(), 0);  // node index + 1; 0 = empty
  v_occ(start) = 1;
  v_node(start) = 1;

  int id_run = 1;
  int skipped = 0;
  for (const Vec3i& q : quench.points) {
    if (v_occ(q)) continue;
    if (!(field.cost[field.index(q)] < kInfD)) {
      ++skipped;
      continue;
    }

    const std::vector<Vec3i> path = trace_path(field, q);
    std::vector<int> created;
    int attach_to = -1;
    for (std::size_t k = path.size(); k-- > 0;) {
      const Vec3i p = path[k];
      const std::int32_t handle = v_node(p);
      if (handle != 0) {
        attach_to = int(handle - 1);
        break;
      }
      const int idx = int(g.nodes.size());
      g.nodes.push_back(RootNode{to_vec3d(p), double(r_lcc(p)), id_run, -1, {}});
      if (!created.empty()) {
        // Walking tipward-to-rootward: the new node is the parent of the
        // previously created one.
        g.nodes[std::size_t(idx)].children.push_back(created.back());
        g.nodes[std::size_t(created.back())].parent = idx;
      }
      created.push_back(idx);
    }
    if (created.empty()) continue;  // quench point already inside a node core

    g.nodes[std::size_t(created.back())].parent = attach_to;
    g.nodes[std::size_t(attach_to)].children.push_back(created.back());

    // Control volumes are stamped only after the branch is complete, so the
    // walk above always saw the pre-branch state.
    for (int idx : created) {
      const RootNode& node = g.nodes[std::size_t(idx)];
      const Vec3i p{int(node.pos.x), int(node.pos.y), int(node.pos.z)};
      node_fill(v_occ, v_node, p, node.radius, std::int32_t(idx + 1), cfg);
    }
    ++id_run;
  }

  if (skipped > 0)
    std::fprintf(stderr,
                 "warning: skipped %d quench point(s) with no finite path\n",
                 skipped);
  g.branch_count = id_run;
  if (debug) {
    debug->v_occ = v_occ;
    debug->skipped_unreachable = skipped;
  }
  return g;
}

}  // namespace rootex
