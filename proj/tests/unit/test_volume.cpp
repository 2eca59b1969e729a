#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rootex/sphere.hpp"
#include "rootex/volume.hpp"

using namespace rootex;

TEST_CASE("grid layout is x fastest, then y, then z") {
  Grid3<int> g(3, 4, 5);
  CHECK(g.index(1, 0, 0) == 1);
  CHECK(g.index(0, 1, 0) == 3);
  CHECK(g.index(0, 0, 1) == 12);
  CHECK(g.position(12 + 3 + 1) == Vec3i{1, 1, 1});
}

TEST_CASE("checked access rejects out-of-bounds positions") {
  VolumeF vol(2, 2, 2, 1.0f);
  CHECK(vol.at(1, 1, 1) == 1.0f);
  CHECK_THROWS_AS(vol.at(2, 0, 0), InputError);
  CHECK_THROWS_AS(vol.at(0, -1, 0), InputError);
}

TEST_CASE("sphere mask cardinalities") {
  CHECK(sphere_mask(0).offsets.size() == 1);
  CHECK(sphere_mask(1).offsets.size() == 7);   // origin + 6 axis neighbors
  CHECK(sphere_mask(2).offsets.size() == 33);
}

TEST_CASE("sphere mask equals brute-force enumeration") {
  for (int r = 0; r <= 6; ++r) {
    const auto expect = oracles::sphere_offsets(r);
    const auto& got = sphere_mask(r).offsets;
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(got[i] == expect[i]);
  }
  // strict growth
  for (int r = 1; r <= 6; ++r)
    CHECK(sphere_mask(r).offsets.size() > sphere_mask(r - 1).offsets.size());
}

TEST_CASE("sphere shells partition the sphere") {
  std::size_t total = 0;
  for (int r = 0; r <= 5; ++r) total += sphere_shell(r).offsets.size();
  CHECK(total == sphere_mask(5).offsets.size());
}

TEST_CASE("sphere_voxels clips at the border") {
  VolumeF vol(9, 9, 9, 0.0f);
  CHECK(sphere_voxels(vol, {4, 4, 4}, 1).size() == 7);
  CHECK(sphere_voxels(vol, {0, 0, 0}, 1).size() == 4);  // origin + 3 in-bounds
  CHECK(sphere_voxels(vol, {4, 4, 4}, 2).size() == 33);
  CHECK_THROWS_AS(sphere_voxels(vol, {9, 0, 0}, 1), InputError);
}

TEST_CASE("neighbors26 counts and symmetry") {
  VolumeF vol(5, 5, 5, 0.0f);
  CHECK(neighbors26(vol, {2, 2, 2}).size() == 26);
  CHECK(neighbors26(vol, {0, 0, 0}).size() == 7);
  VolumeF flat(3, 3, 1, 0.0f);
  CHECK(neighbors26(flat, {1, 1, 0}).size() == 8);  // in-plane only
  CHECK_THROWS_AS(neighbors26(vol, {5, 2, 2}), InputError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3i p{coord(rng), coord(rng), coord(rng)};
    for (const Vec3i& q : neighbors26(vol, p)) {
      const auto back = neighbors26(vol, q);
      CHECK(std::find(back.begin(), back.end(), p) != back.end());
    }
  }
}

TEST_CASE("rvol round trip is the identity, including infinity") {
  helpers::TempDir tmp;
  VolumeF vol(2, 2, 2, 1.0f);
  vol(1, 1, 1) = kInf;
  vol(0, 1, 0) = -2.5f;
  const std::string path = tmp.file("a.rvol");
  write_rvol(path, vol);
  const VolumeF back = read_rvol_f32(path);
  CHECK(back == vol);

  VolumeU8 mask(3, 2, 1, 0);
  mask(2, 1, 0) = 1;
  mask(0, 0, 0) = 255;
  const std::string mpath = tmp.file("m.rvol");
  write_rvol(mpath, mask);
  CHECK(read_rvol_u8(mpath) == mask);
  CHECK(peek_rvol_dtype(mpath) == RvolType::u8);
  const VolumeF as_float = read_rvol_as_float(mpath);
  CHECK(as_float(0, 0, 0) == 255.0f);
}

TEST_CASE("rvol rejects malformed input") {
  helpers::TempDir tmp;
  const auto write_file = [&](const std::string& name, const std::string& contents) {
    std::ofstream out(tmp.file(name), std::ios::binary);
    out << contents;
    return tmp.file(name);
  };

  // 4x4x4 header but only 63 float elements
  std::string short_data = "RVOL1 4 4 4 f32le\n";
  short_data.append(63 * 4, '\0');
  CHECK_THROWS_AS(read_rvol_f32(write_file("short.rvol", short_data)), InputError);

  CHECK_THROWS_AS(read_rvol_f32(write_file("bad.rvol", "RVOLX 2 2 2 f32le\n")),
                  InputError);
  CHECK_THROWS_AS(read_rvol_f32(write_file("dtype.rvol", "RVOL1 2 2 2 f64le\n")),
                  InputError);
  CHECK_THROWS_AS(read_rvol_f32(tmp.file("missing.rvol")), InputError);

  std::string trailing = "RVOL1 1 1 1 u8\n";
  trailing.append(2, '\x01');
  CHECK_THROWS_AS(read_rvol_u8(write_file("long.rvol", trailing)), InputError);
}
