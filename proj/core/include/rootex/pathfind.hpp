#pragma once

#include <vector>

#include "rootex/config.hpp"
#include "rootex/volume.hpp"

namespace rootex {

/// Per-voxel shortest-path state produced by shortest_paths. Unreached
/// voxels keep cost +inf. For every finite-cost voxel the pred chain walks
/// back to the start in path_len steps. anchor_idx is the path index of the
/// last no-gap voxel on the path; for no-gap voxels it equals path_len.
struct PathField {
  int nx = 0, ny = 0, nz = 0;
  std::vector<double> cost;
  std::vector<std::int32_t> pred;  // flat index of predecessor, -1 for none
  std::vector<std::int32_t> path_len;
  std::vector<std::int32_t> anchor_idx;
  std::vector<double> anchor_cost;  // path cost at the anchor voxel
  std::vector<std::uint8_t> is_gap;

  std::size_t index(Vec3i p) const {
    return std::size_t(p.x) + std::size_t(nx) * (std::size_t(p.y) + std::size_t(ny) * p.z);
  }
  Vec3i position(std::size_t idx) const {
    return {int(idx % nx), int((idx / nx) % ny), int(idx / (std::size_t(nx) * ny))};
  }
  bool in_bounds(Vec3i p) const {
    return p.x >= 0 && p.x < nx && p.y >= 0 && p.y < ny && p.z >= 0 && p.z < nz;
  }
};

/// Dijkstra over the 26-connected voxel graph. Stepping into voxel q costs
/// cost_vol(q), uniformly over all 26 directions; the start voxel is free.
/// Voxels with cost_vol == +inf are never entered.
///
/// With cfg.gap_len == 0 this is textbook Dijkstra where no voxel whose
/// tentative cost reaches cfg.omega is finalized or expanded.
///
/// With gap closing, voxels whose cost exceeds half the volume maximum are
/// potential gaps. Gap voxels ignore omega but a run of more than gap_len
/// consecutive gap voxels is pruned. When a run of g <= gap_len gap voxels
/// ends in a no-gap voxel q, q is finalized at
///     anchor_cost + g * cost_vol(q)
/// (the cost the path would have had across intact data), and its anchor
/// resets to itself. Bridged entries may carry a lower cost than the
/// current frontier; every voxel still settles exactly once, which keeps
/// the predecessor forest acyclic.
PathField shortest_paths(const VolumeF& cost_vol, Vec3i start,
                         const ExtractionConfig& cfg);

/// Ordered voxel path from the start to p (inclusive); consecutive elements
/// are 26-neighbors. Throws InputError if p is unreachable.
std::vector<Vec3i> trace_path(const PathField& field, Vec3i p);

}  // namespace rootex
