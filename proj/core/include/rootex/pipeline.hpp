#pragma once

#include <string>

#include "rootex/config.hpp"
#include "rootex/root_graph.hpp"
#include "rootex/volume.hpp"

namespace rootex {

enum class CostKind { Radius, Relative };

/// Start-point search: the voxel with the largest radius estimate among
/// voxels at or above gamma within the lowest `top_slices` z-slices, ties
/// broken lexicographically. Throws InputError when those slices carry no
/// signal (pass an explicit start instead).
Vec3i auto_start(const VolumeF& seg, const ExtractionConfig& cfg,
                 int top_slices = 10);

/// Full extraction: component extraction with gap closing, centerline cost,
/// branch-by-branch skeletonization, optional simplification (cfg.delta > 0).
/// skip_lcc thresholds the input at gamma and feeds it straight to
/// skeletonization. A nonempty debug_dir receives the intermediate volumes
/// as RVOL files.
RootGraph run_extract(const VolumeF& seg, Vec3i start, const ExtractionConfig& cfg,
                      CostKind kind = CostKind::Radius, bool skip_lcc = false,
                      const std::string& debug_dir = "");

}  // namespace rootex
