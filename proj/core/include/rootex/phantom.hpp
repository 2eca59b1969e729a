#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootex/root_graph.hpp"
#include "rootex/volume.hpp"

namespace rootex {

/// Polyline centerline with a radius per segment. parent < 0 starts the
/// root system (the first vertex of path 0 is the start point); otherwise
/// the first vertex must coincide with a vertex of the parent path, where
/// the branch attaches.
struct PhantomPath {
  int parent = -1;
  std::vector<Vec3d> vertices;
  std::vector<double> seg_radii;  // one entry per segment
};

/// Arc-length interval [t0, t1) of one path whose swept voxels are cleared.
struct PhantomGap {
  int path = 0;
  double t0 = 0.0, t1 = 0.0;
};

struct PhantomBlob {
  Vec3d center;
  double radius = 0.0;
  double intensity = 1.0;
};

struct PhantomSpec {
  int nx = 0, ny = 0, nz = 0;
  std::vector<PhantomPath> paths;
  std::vector<PhantomGap> gaps;
  std::vector<PhantomBlob> blobs;
};

// PHANTOM1 text format, line oriented ('#' comments):
//   PHANTOM1
//   dims nx ny nz
//   path <parent> <n_vertices> x y z [x y z ...] radii r1 ... r_{n-1}
//   gap <path_index> <arc_from> <arc_to>
//   blob x y z radius intensity
PhantomSpec parse_phantom_spec(const std::string& text);
PhantomSpec read_phantom_spec(const std::string& path);

struct Phantom {
  VolumeF volume;
  RootGraph graph;  // exact centerline polylines with per-node radii
};

/// Deterministic stamping: a voxel gets intensity 1.0 when the closest
/// point on some path is within that segment's radius and its arc position
/// lies outside every gap interval; blobs stamp their intensity inside
/// their radius. Pure function of (spec, seed); the seed is reserved for
/// randomized phantom variants and folded into nothing today.
Phantom generate(const PhantomSpec& spec, std::uint64_t seed);

}  // namespace rootex
