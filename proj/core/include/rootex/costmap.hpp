#pragma once

#include "rootex/config.hpp"
#include "rootex/volume.hpp"

namespace rootex {

/// Per-voxel radius estimate by growing spheres: the largest r such that
/// for every r' <= r the fraction of sphere voxels with vol >= threshold
/// is at least fill_ratio. Out-of-bounds sphere positions count toward the
/// denominator but never the numerator, so radii shrink near the borders.
/// R(p) = 0 when vol(p) < threshold.
VolumeI radius_map(const VolumeF& vol, double threshold, double fill_ratio,
                   int threads = 0);
VolumeI radius_map(const VolumeU8& vol, double threshold, double fill_ratio,
                   int threads = 0);

/// Voxel cost from inverted intensity and radius:
///   C_inv(p) = seg(p) + w_rad * R(p)/max(R)
///   C(p)     = 1 - C_inv(p)/max(C_inv) + epsilon
/// Strictly positive everywhere. Throws InputError("empty segmentation")
/// when max(C_inv) == 0. When max(R) == 0 the radius term is zero.
VolumeF cost_map_seg(const VolumeF& seg, const ExtractionConfig& cfg);

/// Gap-contrast cost: voxels below gamma cost gap_penalty * C(p), others C(p).
VolumeF cost_map_gap(const VolumeF& seg, const VolumeF& c_seg,
                     const ExtractionConfig& cfg);

/// Radius estimate on the binary component volume (threshold "== 1",
/// fill ratio cfg.fill_ratio_lcc).
VolumeI radius_map_lcc(const VolumeU8& lcc, const ExtractionConfig& cfg);

/// Centerline cost from inverted radius: 1 - R(p)/max(R) inside the
/// component, +inf outside it. Voxels inside the component whose radius
/// estimate is 0 (thin parts, bridged gaps) get the maximum finite cost 1
/// and stay traversable. Throws InputError("empty LCC") if max(R) == 0.
VolumeF cost_map_radius(const VolumeI& r_lcc, const VolumeU8& lcc);

/// Relative-radius centerline cost: 1 - (# of 26-neighbors with strictly
/// smaller radius)/26 inside the component, +inf outside. Out-of-bounds
/// neighbors count as radius 0.
VolumeF cost_map_relative(const VolumeI& r_lcc, const VolumeU8& lcc,
                          int threads = 0);

}  // namespace rootex
