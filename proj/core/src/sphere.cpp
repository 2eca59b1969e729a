#include "rootex/sphere.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace rootex {

namespace {

// Membership uses exact integer arithmetic: ||o||_2 <= r  <=>  |o|^2 <= r^2.
SphereMask build_mask(int radius, bool shell_only) {
  SphereMask m;
  m.radius = radius;
  const std::int64_t r_sq = std::int64_t(radius) * radius;
  const std::int64_t inner_sq =
      radius > 0 ? std::int64_t(radius - 1) * (radius - 1) : -1;
  for (int dz = -radius; dz <= radius; ++dz)
    for (int dy = -radius; dy <= radius; ++dy)
      for (int dx = -radius; dx <= radius; ++dx) {
        const std::int64_t d_sq =
            std::int64_t(dx) * dx + std::int64_t(dy) * dy + std::int64_t(dz) * dz;
        if (d_sq > r_sq) continue;
        if (shell_only && d_sq <= inner_sq) continue;
        m.offsets.push_back({dx, dy, dz});
      }
  return m;
}

const SphereMask& cached(int radius, bool shell_only) {
  if (radius < 0) throw InputError("sphere mask: radius must be nonnegative");
  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::unique_ptr<SphereMask>> cache;
  const std::int64_t key = std::int64_t(radius) * 2 + (shell_only ? 1 : 0);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<SphereMask>(build_mask(radius, shell_only)))
             .first;
  return *it->second;
}

}  // namespace

const SphereMask& sphere_mask(int radius) { return cached(radius, false); }

const SphereMask& sphere_shell(int radius) { return cached(radius, true); }

}  // namespace rootex
