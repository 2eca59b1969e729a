#pragma once

#include "rootex/config.hpp"
#include "rootex/pathfind.hpp"
#include "rootex/volume.hpp"

namespace rootex {

/// Binary largest-connected-component volume. A voxel is set when it is
/// reachable under the path-cost rules and at or above gamma (ext), or when
/// it lies on the traced path of such a voxel (con) — the latter keeps the
/// bridged gap runs. The 1-set is 26-connected and contains the start.
/// Throws InputError when no voxel satisfies ext.
VolumeU8 extract_lcc(const VolumeF& seg, const PathField& field,
                     const ExtractionConfig& cfg);

}  // namespace rootex
