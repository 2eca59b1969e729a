#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "rootex/errors.hpp"
#include "rootex/geometry.hpp"

namespace rootex {

/// Dense 3D grid. Element layout is fixed: x fastest, then y, then z,
/// i.e. flat index = x + nx*(y + ny*z). All pipeline volumes (intensities,
/// cost maps, radius maps, binary masks) use this container.
template <typename T>
class Grid3 {
 public:
  Grid3() = default;

  Grid3(int nx, int ny, int nz, T fill = T{})
      : nx_(nx), ny_(ny), nz_(nz), data_(std::size_t(nx) * ny * nz, fill) {
    if (nx <= 0 || ny <= 0 || nz <= 0)
      throw InputError("Grid3: dimensions must be positive");
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  std::size_t size() const { return data_.size(); }

  bool in_bounds(int x, int y, int z) const {
    return x >= 0 && x < nx_ && y >= 0 && y < ny_ && z >= 0 && z < nz_;
  }
  bool in_bounds(Vec3i p) const { return in_bounds(p.x, p.y, p.z); }

  std::size_t index(int x, int y, int z) const {
    assert(in_bounds(x, y, z));
    return std::size_t(x) + std::size_t(nx_) * (std::size_t(y) + std::size_t(ny_) * z);
  }
  std::size_t index(Vec3i p) const { return index(p.x, p.y, p.z); }

  Vec3i position(std::size_t idx) const {
    const int x = int(idx % nx_);
    const int y = int((idx / nx_) % ny_);
    const int z = int(idx / (std::size_t(nx_) * ny_));
    return {x, y, z};
  }

  // Unchecked fast path; asserts in debug builds.
  T& operator()(int x, int y, int z) { return data_[index(x, y, z)]; }
  const T& operator()(int x, int y, int z) const { return data_[index(x, y, z)]; }
  T& operator()(Vec3i p) { return data_[index(p)]; }
  const T& operator()(Vec3i p) const { return data_[index(p)]; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  // Checked access. Out of bounds is an error, never wraparound.
  const T& at(int x, int y, int z) const {
    if (!in_bounds(x, y, z)) throw InputError("Grid3: position out of bounds");
    return data_[index(x, y, z)];
  }
  const T& at(Vec3i p) const { return at(p.x, p.y, p.z); }

  template <typename U>
  bool same_dims(const Grid3<U>& other) const {
    return nx_ == other.nx() && ny_ == other.ny() && nz_ == other.nz();
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  friend bool operator==(const Grid3&, const Grid3&) = default;

 private:
  int nx_ = 0, ny_ = 0, nz_ = 0;
  std::vector<T> data_;
};

using VolumeF = Grid3<float>;
using VolumeU8 = Grid3<std::uint8_t>;
using VolumeI = Grid3<std::int32_t>;

inline constexpr float kInf = std::numeric_limits<float>::infinity();
inline constexpr double kInfD = std::numeric_limits<double>::infinity();

/// All in-bounds positions differing from p by an offset in {-1,0,1}^3 \ {0}.
/// p itself must be in bounds.
template <typename T>
std::vector<Vec3i> neighbors26(const Grid3<T>& vol, Vec3i p) {
  if (!vol.in_bounds(p)) throw InputError("neighbors26: position out of bounds");
  std::vector<Vec3i> out;
  out.reserve(26);
  for (int dz = -1; dz <= 1; ++dz)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        const Vec3i q{p.x + dx, p.y + dy, p.z + dz};
        if (vol.in_bounds(q)) out.push_back(q);
      }
  return out;
}

// ---- RVOL file format ------------------------------------------------------
//
// ASCII header line "RVOL1 nx ny nz dtype" (dtype is "f32le" or "u8"),
// a single '\n', then raw little-endian voxel data in x-fastest layout.
// Infinity is a valid f32le value and round-trips.

enum class RvolType { f32le, u8 };

RvolType peek_rvol_dtype(const std::string& path);

VolumeF read_rvol_f32(const std::string& path);
VolumeU8 read_rvol_u8(const std::string& path);

/// Reads either dtype; u8 values are converted to float verbatim (0/1 masks
/// stay 0.0/1.0).
VolumeF read_rvol_as_float(const std::string& path);

void write_rvol(const std::string& path, const VolumeF& vol);
void write_rvol(const std::string& path, const VolumeU8& vol);

}  // namespace rootex
