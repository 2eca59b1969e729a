#include "rootex/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace rootex {

namespace {

struct QueueItem {
  double cost;
  std::uint64_t seq;  // insertion order breaks cost ties deterministically
  std::int64_t idx;
};

struct QueueOrder {
  bool operator()(const QueueItem& a, const QueueItem& b) const {
    if (a.cost != b.cost) return a.cost > b.cost;
    return a.seq > b.seq;
  }
};

// The 26 neighbor offsets, axial steps first (then face and space
// diagonals). Ties in the queue fall back to insertion order, so expanding
// shorter euclidean steps first keeps tied paths straight instead of
// zig-zagging through diagonals.
const std::vector<Vec3i>& expansion_offsets() {
  static const std::vector<Vec3i> offsets = [] {
    std::vector<Vec3i> out;
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (dx != 0 || dy != 0 || dz != 0) out.push_back({dx, dy, dz});
    std::stable_sort(out.begin(), out.end(), [](Vec3i a, Vec3i b) {
      return norm_sq(a) < norm_sq(b);
    });
    return out;
  }();
  return offsets;
}

}  // namespace

PathField shortest_paths(const VolumeF& cost_vol, Vec3i start,
                         const ExtractionConfig& cfg) {
  if (!cost_vol.in_bounds(start))
    throw InputError("shortest_paths: start point out of bounds");
  if (!(cost_vol(start) < kInf))
    throw InputError("shortest_paths: start point has infinite cost");

  const std::size_t n = cost_vol.size();
  PathField f;
  f.nx = cost_vol.nx();
  f.ny = cost_vol.ny();
  f.nz = cost_vol.nz();
  f.cost.assign(n, kInfD);
  f.pred.assign(n, -1);
  f.path_len.assign(n, 0);
  f.anchor_idx.assign(n, 0);
  f.anchor_cost.assign(n, 0.0);
  f.is_gap.assign(n, 0);

  // Gap classification: cost above half the (finite) volume maximum.
  if (cfg.gap_len > 0) {
    double max_c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = cost_vol[i];
      if (c < kInfD) max_c = std::max(max_c, c);
    }
    const double gap_threshold = max_c / 2.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = cost_vol[i];
      f.is_gap[i] = (c < kInfD && c > gap_threshold) ? 1 : 0;
    }
  }

  const std::size_t start_idx = f.index(start);
  f.cost[start_idx] = 0.0;

  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueOrder> queue;
  std::uint64_t seq = 0;
  queue.push({0.0, seq++, std::int64_t(start_idx)});

  // Voxels settle exactly once. Bridge rewrites can enqueue entries cheaper
  // than the current frontier, so pred edges must only ever point at already
  // settled voxels; that keeps every pred chain acyclic and rooted at the
  // start even when bridges undercut earlier costs.
  std::vector<std::uint8_t> settled(n, 0);

  const int nx = f.nx, ny = f.ny, nz = f.nz;
  while (!queue.empty()) {
    const QueueItem top = queue.top();
    queue.pop();
    const std::size_t u = std::size_t(top.idx);
    if (settled[u]) continue;
    settled[u] = 1;

    const Vec3i pu = f.position(u);
    const bool u_gap = f.is_gap[u] != 0;
    const double u_cost = f.cost[u];
    const std::int32_t u_len = f.path_len[u];
    const std::int32_t next_len = u_len + 1;

    for (const Vec3i& o : expansion_offsets()) {
      const int x = pu.x + o.x;
      const int y = pu.y + o.y;
      const int z = pu.z + o.z;
      if (x < 0 || x >= nx || y < 0 || y >= ny || z < 0 || z >= nz) continue;

      const std::size_t v =
          std::size_t(x) + std::size_t(nx) * (std::size_t(y) + std::size_t(ny) * z);
      const double step = cost_vol[v];
      if (!(step < kInfD)) continue;

      double tentative;
      std::int32_t anchor_idx;
      double anchor_cost;
      if (f.is_gap[v]) {
        // Run length counts gap voxels including v itself.
        const std::int32_t run = next_len - f.anchor_idx[u];
        if (run > cfg.gap_len) continue;
        tentative = u_cost + step;
        anchor_idx = f.anchor_idx[u];
        anchor_cost = f.anchor_cost[u];
      } else {
        if (u_gap) {
          const std::int32_t gap_voxels = u_len - f.anchor_idx[u];
          tentative = f.anchor_cost[u] + double(gap_voxels) * step;
        } else {
          tentative = u_cost + step;
        }
        if (tentative >= cfg.omega) continue;
        anchor_idx = next_len;
        anchor_cost = tentative;
      }

      if (!settled[v] && tentative < f.cost[v]) {
        f.cost[v] = tentative;
        f.pred[v] = std::int32_t(u);
        f.path_len[v] = next_len;
        f.anchor_idx[v] = anchor_idx;
        f.anchor_cost[v] = anchor_cost;
        queue.push({tentative, seq++, std::int64_t(v)});
      }
    }
  }
  return f;
}

std::vector<Vec3i> trace_path(const PathField& field, Vec3i p) {
  if (!field.in_bounds(p)) throw InputError("trace_path: position out of bounds");
  std::size_t idx = field.index(p);
  if (!(field.cost[idx] < kInfD)) throw InputError("trace_path: position unreachable");

  std::vector<Vec3i> path;
  path.reserve(std::size_t(field.path_len[idx]) + 1);
  while (true) {
    path.push_back(field.position(idx));
    const std::int32_t prev = field.pred[idx];
    if (prev < 0) break;
    idx = std::size_t(prev);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace rootex
