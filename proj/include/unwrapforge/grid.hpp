#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace unwrapforge {

enum class GridKind : std::uint8_t {
  Unwrapped = 0,
  Wrapped = 1,
  Conditioning = 2,
  Displacement = 3,
  Weight = 4,
};

struct GridMeta {
  double pixel_spacing_x = 100.0;  // meters/pixel
  double pixel_spacing_y = 100.0;
  double wavelength = 0.0556;      // meters (C-band default)
  std::array<double, 3> los = {0.0, 0.0, 1.0};  // unit (east, north, up)
  GridKind kind = GridKind::Unwrapped;

  void validate() const;  // throws ConfigError on violated invariants
};

// Immutable-by-convention 2-D raster of phase (radians) or displacement
// (meters). Row-major, top-left origin. An empty mask means all pixels valid.
struct PhaseGrid {
  int width = 0;
  int height = 0;
  std::vector<double> values;      // width * height
  std::vector<std::uint8_t> mask;  // empty, or width * height (1 = valid)
  GridMeta meta;

  PhaseGrid() = default;
  PhaseGrid(int w, int h, double fill = 0.0, GridMeta m = {});

  std::size_t size() const { return values.size(); }
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  double at(int row, int col) const { return values[idx(row, col)]; }
  double& at(int row, int col) { return values[idx(row, col)]; }
  bool valid(std::size_t i) const { return mask.empty() || mask[i] != 0; }
  bool valid(int row, int col) const { return valid(idx(row, col)); }

  // Grid-frame coordinates: origin at the grid centre, east grows with
  // column, north shrinks with row (top-left pixel is the most northern).
  double east(int col) const {
    return (col - 0.5 * (width - 1)) * meta.pixel_spacing_x;
  }
  double north(int row) const {
    return (0.5 * (height - 1) - row) * meta.pixel_spacing_y;
  }

  bool congruent(const PhaseGrid& other) const;
  // throws DataError when shape or mask differs
  void require_congruent(const PhaseGrid& other, const std::string& what) const;
  // throws DataError naming the first offending pixel
  void require_finite(const std::string& what) const;
};

// Principal-interval reduction to [-pi, pi).
double wrap_value(double phi);

// Elementwise wrap; mask preserved, result kind = Wrapped.
PhaseGrid wrap_phase(const PhaseGrid& phi);

// wrap(unwrapped - wrapped); zero everywhere for a consistent unwrapping.
PhaseGrid rewrap_residual(const PhaseGrid& unwrapped, const PhaseGrid& wrapped);

// Elementwise sum of congruent grids; meta taken from the first.
PhaseGrid superpose(const std::vector<PhaseGrid>& fields);

}  // namespace unwrapforge
