#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "rootex/phantom.hpp"
#include "rootex/root_graph.hpp"
#include "rootex/volume.hpp"

namespace helpers {

inline rootex::VolumeF random_volume(int n, std::mt19937_64& rng, double lo = 0.0,
                                     double hi = 1.0) {
  rootex::VolumeF vol(n, n, n);
  std::uniform_real_distribution<double> dist(lo, hi);
  for (std::size_t i = 0; i < vol.size(); ++i) vol[i] = float(dist(rng));
  return vol;
}

/// 1x1x11 two-segment line: 4 root voxels, a 3-voxel gap, 4 root voxels.
inline rootex::VolumeF two_segment_line() {
  rootex::VolumeF vol(1, 1, 11, 0.0f);
  for (int z = 0; z < 11; ++z)
    if (z <= 3 || z >= 7) vol(0, 0, z) = 1.0f;
  return vol;
}

/// Random tree with n nodes and jittered positions, uniform branch spread.
inline rootex::RootGraph random_tree(int n, std::mt19937_64& rng) {
  rootex::RootGraph g;
  std::uniform_real_distribution<double> coord(0.0, 40.0);
  std::uniform_real_distribution<double> radius(0.5, 4.0);
  g.nodes.push_back({{coord(rng), coord(rng), coord(rng)}, radius(rng), 0, -1, {}});
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int parent = pick(rng);
    g.nodes.push_back(
        {{coord(rng), coord(rng), coord(rng)}, radius(rng), 1 + (i % 3), parent, {}});
    g.nodes[std::size_t(parent)].children.push_back(i);
  }
  g.branch_count = 4;
  return g;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("rootex_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace helpers
