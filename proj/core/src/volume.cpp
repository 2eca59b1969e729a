#include "rootex/volume.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rootex {

static_assert(std::endian::native == std::endian::little,
              "RVOL I/O assumes a little-endian host");
static_assert(sizeof(float) == 4);

namespace {

struct RvolHeader {
  int nx, ny, nz;
  RvolType dtype;
};

RvolHeader read_header(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line))
    throw InputError("RVOL: cannot read header from " + path);
  std::istringstream hs(line);
  std::string magic, dtype;
  long long nx = 0, ny = 0, nz = 0;
  if (!(hs >> magic >> nx >> ny >> nz >> dtype) || magic != "RVOL1")
    throw InputError("RVOL: malformed header in " + path);
  if (nx <= 0 || ny <= 0 || nz <= 0 || nx * ny * nz > (1ll << 40))
    throw InputError("RVOL: bad dimensions in " + path);
  RvolHeader h{int(nx), int(ny), int(nz), RvolType::f32le};
  if (dtype == "f32le")
    h.dtype = RvolType::f32le;
  else if (dtype == "u8")
    h.dtype = RvolType::u8;
  else
    throw InputError("RVOL: unsupported element type '" + dtype + "' in " + path);
  return h;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  return in;
}

template <typename T>
Grid3<T> read_payload(std::ifstream& in, const RvolHeader& h, const std::string& path) {
  Grid3<T> vol(h.nx, h.ny, h.nz);
  const std::streamsize want = std::streamsize(vol.size() * sizeof(T));
  in.read(reinterpret_cast<char*>(vol.data()), want);
  if (in.gcount() != want)
    throw InputError("RVOL: data shorter than header dimensions in " + path);
  char extra;
  if (in.read(&extra, 1))
    throw InputError("RVOL: trailing data beyond header dimensions in " + path);
  return vol;
}

template <typename T>
void write_impl(const std::string& path, const Grid3<T>& vol, const char* dtype) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path);
  char header[96];
  std::snprintf(header, sizeof(header), "RVOL1 %d %d %d %s\n", vol.nx(), vol.ny(),
                vol.nz(), dtype);
  out << header;
  out.write(reinterpret_cast<const char*>(vol.data()),
            std::streamsize(vol.size() * sizeof(T)));
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace

RvolType peek_rvol_dtype(const std::string& path) {
  auto in = open_input(path);
  return read_header(in, path).dtype;
}

VolumeF read_rvol_f32(const std::string& path) {
  auto in = open_input(path);
  const auto h = read_header(in, path);
  if (h.dtype != RvolType::f32le)
    throw InputError("RVOL: expected f32le data in " + path);
  return read_payload<float>(in, h, path);
}

VolumeU8 read_rvol_u8(const std::string& path) {
  auto in = open_input(path);
  const auto h = read_header(in, path);
  if (h.dtype != RvolType::u8)
    throw InputError("RVOL: expected u8 data in " + path);
  return read_payload<std::uint8_t>(in, h, path);
}

VolumeF read_rvol_as_float(const std::string& path) {
  auto in = open_input(path);
  const auto h = read_header(in, path);
  if (h.dtype == RvolType::f32le) return read_payload<float>(in, h, path);
  const auto bytes = read_payload<std::uint8_t>(in, h, path);
  VolumeF vol(h.nx, h.ny, h.nz);
  for (std::size_t i = 0; i < bytes.size(); ++i) vol[i] = float(bytes[i]);
  return vol;
}

void write_rvol(const std::string& path, const VolumeF& vol) {
  write_impl(path, vol, "f32le");
}

void write_rvol(const std::string& path, const VolumeU8& vol) {
  write_impl(path, vol, "u8");
}

}  // namespace rootex
