#include "unwrapforge/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "unwrapforge/errors.hpp"

namespace unwrapforge {

namespace {

constexpr std::size_t kHeaderSize = 64;
constexpr std::uint64_t kMaxPixels = 1ull << 28;

void put_u32(std::vector<std::uint8_t>& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& buf, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

void put_f32(std::vector<std::uint8_t>& buf, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

float get_f32(const std::uint8_t* p) {
  std::uint32_t bits = 0;
  for (int i = 0; i < 4; ++i) bits |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

void write_grid(const PhaseGrid& grid, const std::filesystem::path& path) {
  if (grid.width <= 0 || grid.height <= 0 ||
      static_cast<std::uint64_t>(grid.width) * grid.height > kMaxPixels)
    throw GridIoError(GridIoCode::DimensionOverflow, "write_grid: bad dimensions");
  grid.meta.validate();
  grid.require_finite("write_grid");
  const std::size_t n = grid.size();
  const bool has_mask = !grid.mask.empty();

  std::vector<std::uint8_t> buf;
  buf.reserve(kHeaderSize + 4 * n + (has_mask ? (n + 7) / 8 : 0));
  buf.insert(buf.end(), {'P', 'G', 'R', 'D'});
  buf.push_back(1);
  buf.push_back(static_cast<std::uint8_t>(grid.meta.kind));
  buf.push_back(has_mask ? 1 : 0);
  buf.push_back(0);
  put_u32(buf, static_cast<std::uint32_t>(grid.width));
  put_u32(buf, static_cast<std::uint32_t>(grid.height));
  put_f64(buf, grid.meta.wavelength);
  put_f64(buf, grid.meta.pixel_spacing_x);
  put_f64(buf, grid.meta.pixel_spacing_y);
  for (double c : grid.meta.los) put_f64(buf, c);

  for (std::size_t i = 0; i < n; ++i) {
    if (grid.valid(i))
      put_f32(buf, static_cast<float>(grid.values[i]));
    else
      put_f32(buf, std::numeric_limits<float>::quiet_NaN());
  }
  if (has_mask) {
    for (std::size_t byte = 0; byte < (n + 7) / 8; ++byte) {
      std::uint8_t b = 0;
      for (int bit = 0; bit < 8; ++bit) {
        const std::size_t i = byte * 8 + bit;
        if (i < n && grid.mask[i]) b |= static_cast<std::uint8_t>(1u << bit);
      }
      buf.push_back(b);
    }
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw DataError("write_grid: cannot open " + path.string());
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!os) throw DataError("write_grid: write failed for " + path.string());
}

PhaseGrid read_grid(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("read_grid: cannot open " + path.string());
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(is)),
                                std::istreambuf_iterator<char>());

  if (buf.size() < kHeaderSize)
    throw GridIoError(GridIoCode::Truncated, "read_grid: file shorter than header");
  if (std::memcmp(buf.data(), "PGRD", 4) != 0)
    throw GridIoError(GridIoCode::BadMagic, "read_grid: bad magic");
  if (buf[4] != 1)
    throw GridIoError(GridIoCode::VersionMismatch,
                      "read_grid: unsupported version " + std::to_string(buf[4]));
  if (buf[5] > 4) throw GridIoError(GridIoCode::BadKind, "read_grid: unknown kind");
  const bool has_mask = (buf[6] & 1) != 0;

  const std::uint64_t w = get_u32(buf.data() + 8);
  const std::uint64_t h = get_u32(buf.data() + 12);
  if (w == 0 || h == 0 || w * h > kMaxPixels)
    throw GridIoError(GridIoCode::DimensionOverflow, "read_grid: bad dimensions");
  const std::size_t n = static_cast<std::size_t>(w * h);
  const std::size_t expect = kHeaderSize + 4 * n + (has_mask ? (n + 7) / 8 : 0);
  if (buf.size() < expect)
    throw GridIoError(GridIoCode::Truncated, "read_grid: truncated payload");

  PhaseGrid grid(static_cast<int>(w), static_cast<int>(h));
  grid.meta.kind = static_cast<GridKind>(buf[5]);
  grid.meta.wavelength = get_f64(buf.data() + 16);
  grid.meta.pixel_spacing_x = get_f64(buf.data() + 24);
  grid.meta.pixel_spacing_y = get_f64(buf.data() + 32);
  for (int i = 0; i < 3; ++i) grid.meta.los[i] = get_f64(buf.data() + 40 + 8 * i);

  const std::uint8_t* payload = buf.data() + kHeaderSize;
  for (std::size_t i = 0; i < n; ++i) grid.values[i] = get_f32(payload + 4 * i);
  if (has_mask) {
    grid.mask.assign(n, 0);
    const std::uint8_t* mb = payload + 4 * n;
    for (std::size_t i = 0; i < n; ++i) grid.mask[i] = (mb[i / 8] >> (i % 8)) & 1;
  }
  return grid;
}

PhaseGrid read_raw_f32(const std::filesystem::path& path, int width, int height) {
  if (width <= 0 || height <= 0 ||
      static_cast<std::uint64_t>(width) * height > kMaxPixels)
    throw GridIoError(GridIoCode::DimensionOverflow, "read_raw_f32: bad dimensions");
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("read_raw_f32: cannot open " + path.string());
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(is)),
                                std::istreambuf_iterator<char>());
  const std::size_t n = static_cast<std::size_t>(width) * height;
  if (buf.size() != 4 * n)
    throw GridIoError(GridIoCode::SizeMismatch,
                      "read_raw_f32: expected " + std::to_string(4 * n) + " bytes, got " +
                          std::to_string(buf.size()));
  PhaseGrid grid(width, height);
  for (std::size_t i = 0; i < n; ++i) grid.values[i] = get_f32(buf.data() + 4 * i);
  return grid;
}

void write_pgm(const PhaseGrid& grid, const std::filesystem::path& path) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!grid.valid(i) || !std::isfinite(grid.values[i])) continue;
    lo = std::min(lo, grid.values[i]);
    hi = std::max(hi, grid.values[i]);
  }
  const double span = (hi > lo) ? hi - lo : 1.0;

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw DataError("write_pgm: cannot open " + path.string());
  os << "P5\n" << grid.width << " " << grid.height << "\n255\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    int v = 0;
    if (grid.valid(i) && std::isfinite(grid.values[i]))
      v = static_cast<int>(std::lround(255.0 * (grid.values[i] - lo) / span));
    os.put(static_cast<char>(std::clamp(v, 0, 255)));
  }
  if (!os) throw DataError("write_pgm: write failed for " + path.string());
}

}  // namespace unwrapforge
