#pragma once

#include <vector>

#include "rootex/config.hpp"
#include "rootex/root_graph.hpp"
#include "rootex/volume.hpp"

namespace rootex {

/// Quench points sorted by decreasing euclidean distance to the start point,
/// distance ties broken by lexicographic (x,y,z) order.
struct QuenchList {
  std::vector<Vec3i> points;
};

/// Voxels whose radius estimate strictly exceeds that of more than
/// cfg.quench_threshold of their 26 neighbors (out-of-bounds neighbors count
/// as radius 0). When cfg.cut_z is set, voxels with coordinate < cut_z along
/// cfg.cut_axis are excluded.
QuenchList find_quench_points(const VolumeI& r_lcc, Vec3i start,
                              const ExtractionConfig& cfg);

/// Stamps the control volumes around a created node: v_occ becomes 1 inside
/// radius r_dil = floor(r_lcc_val * beta), v_node takes the handle inside
/// radius floor(r_dil / 2), overwriting previous handles. Spheres clip at
/// the volume border.
void node_fill(VolumeU8& v_occ, VolumeI& v_node, Vec3i p, double r_lcc_val,
               std::int32_t handle, const ExtractionConfig& cfg);

/// Optional insight into the extraction for debugging.
struct SkeletonDebug {
  VolumeU8 v_occ;
  int skipped_unreachable = 0;
};

/// Branch-by-branch curve skeleton extraction. cost selects the centerline
/// cost map (inverted radius or relative radius); shortest paths on it are
/// computed internally from the start with gap closing disabled and no cost
/// cutoff. Branches start at the furthest unconsumed quench point, follow
/// the path toward the start while the node control volume is empty, then
/// attach to the node referenced there. Control volumes are stamped once a
/// branch is complete. Quench points with no finite path are skipped.
RootGraph extract_graph(const VolumeU8& lcc, const VolumeI& r_lcc,
                        const VolumeF& cost, Vec3i start,
                        const ExtractionConfig& cfg,
                        SkeletonDebug* debug = nullptr);

}  // namespace rootex
