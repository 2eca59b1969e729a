#pragma once

#include <cmath>
#include <cstdint>
#include <tuple>

namespace rootex {

struct Vec3i {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const Vec3i&, const Vec3i&) = default;
};

inline Vec3i operator+(Vec3i a, Vec3i b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3i operator-(Vec3i a, Vec3i b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

inline bool lex_less(Vec3i a, Vec3i b) {
  return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

inline std::int64_t norm_sq(Vec3i a) {
  return std::int64_t(a.x) * a.x + std::int64_t(a.y) * a.y + std::int64_t(a.z) * a.z;
}

inline std::int64_t dist_sq(Vec3i a, Vec3i b) { return norm_sq(a - b); }

struct Vec3d {
  double x = 0, y = 0, z = 0;
  friend bool operator==(const Vec3d&, const Vec3d&) = default;
};

inline Vec3d operator+(Vec3d a, Vec3d b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3d operator-(Vec3d a, Vec3d b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3d operator*(Vec3d a, double s) { return {a.x * s, a.y * s, a.z * s}; }

inline double dot(Vec3d a, Vec3d b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3d a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec3d a, Vec3d b) { return norm(a - b); }

inline Vec3d to_vec3d(Vec3i p) { return {double(p.x), double(p.y), double(p.z)}; }

/// Perpendicular distance from p to the segment [a, b] (clamped to the endpoints).
inline double dist_point_segment(Vec3d p, Vec3d a, Vec3d b) {
  const Vec3d ab = b - a;
  const double len_sq = dot(ab, ab);
  if (len_sq == 0.0) return dist(p, a);
  double t = dot(p - a, ab) / len_sq;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return dist(p, a + ab * t);
}

/// Distance and arc parameter of the closest point on [a, b] to p.
struct SegmentHit {
  double distance;
  double t;  // in [0, 1] along the segment
};

inline SegmentHit project_point_segment(Vec3d p, Vec3d a, Vec3d b) {
  const Vec3d ab = b - a;
  const double len_sq = dot(ab, ab);
  if (len_sq == 0.0) return {dist(p, a), 0.0};
  double t = dot(p - a, ab) / len_sq;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return {dist(p, a + ab * t), t};
}

}  // namespace rootex
