#pragma once

#include <vector>

#include "rootex/volume.hpp"

namespace rootex {

/// Integer offsets o with euclidean norm ||o||_2 <= radius. Includes the
/// origin; |offsets| for radius 0 is 1 and grows strictly with the radius.
struct SphereMask {
  int radius = 0;
  std::vector<Vec3i> offsets;
};

/// Cached sphere mask for the given radius. Safe under concurrent lookup;
/// the returned reference stays valid for the process lifetime.
const SphereMask& sphere_mask(int radius);

/// Cached shell: offsets with radius-1 < ||o||_2 <= radius (the origin for
/// radius 0). Union of shells 0..r equals sphere_mask(r).
const SphereMask& sphere_shell(int radius);

/// In-bounds voxel positions inside the sphere of the given radius around p.
template <typename T>
std::vector<Vec3i> sphere_voxels(const Grid3<T>& vol, Vec3i p, int radius) {
  if (!vol.in_bounds(p)) throw InputError("sphere_voxels: position out of bounds");
  const SphereMask& mask = sphere_mask(radius);
  std::vector<Vec3i> out;
  out.reserve(mask.offsets.size());
  for (const Vec3i& o : mask.offsets) {
    const Vec3i q = p + o;
    if (vol.in_bounds(q)) out.push_back(q);
  }
  return out;
}

}  // namespace rootex
