#include "unwrapforge/grid.hpp"

#include <cmath>
#include <numbers>

#include "unwrapforge/errors.hpp"

namespace unwrapforge {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

void GridMeta::validate() const {
  if (!(wavelength > 0.0)) throw ConfigError("grid meta: wavelength must be > 0");
  if (!(pixel_spacing_x > 0.0) || !(pixel_spacing_y > 0.0))
    throw ConfigError("grid meta: pixel spacing must be > 0");
  const double n2 = los[0] * los[0] + los[1] * los[1] + los[2] * los[2];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-9)
    throw ConfigError("grid meta: line-of-sight vector must have unit norm");
}

PhaseGrid::PhaseGrid(int w, int h, double fill, GridMeta m)
    : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill), meta(m) {
  if (w <= 0 || h <= 0) throw ConfigError("grid dimensions must be positive");
}

bool PhaseGrid::congruent(const PhaseGrid& other) const {
  return width == other.width && height == other.height && mask == other.mask;
}

void PhaseGrid::require_congruent(const PhaseGrid& other, const std::string& what) const {
  if (width != other.width || height != other.height)
    throw DataError(what + ": dimension mismatch (" + std::to_string(width) + "x" +
                    std::to_string(height) + " vs " + std::to_string(other.width) + "x" +
                    std::to_string(other.height) + ")");
  if (mask != other.mask) throw DataError(what + ": mask mismatch");
}

void PhaseGrid::require_finite(const std::string& what) const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (valid(i) && !std::isfinite(values[i]))
      throw DataError(what + ": non-finite value at pixel " + std::to_string(i));
  }
}

double wrap_value(double phi) {
  double w = std::fmod(phi + kPi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w - kPi;
}

PhaseGrid wrap_phase(const PhaseGrid& phi) {
  phi.require_finite("wrap_phase");
  PhaseGrid out = phi;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (out.valid(i)) out.values[i] = wrap_value(out.values[i]);
  }
  out.meta.kind = GridKind::Wrapped;
  return out;
}

PhaseGrid rewrap_residual(const PhaseGrid& unwrapped, const PhaseGrid& wrapped) {
  unwrapped.require_congruent(wrapped, "rewrap_residual");
  PhaseGrid out = unwrapped;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (out.valid(i)) out.values[i] = wrap_value(unwrapped.values[i] - wrapped.values[i]);
  }
  out.meta.kind = GridKind::Unwrapped;
  return out;
}

PhaseGrid superpose(const std::vector<PhaseGrid>& fields) {
  if (fields.empty()) throw DataError("superpose: no fields");
  PhaseGrid out = fields.front();
  for (std::size_t k = 1; k < fields.size(); ++k) {
    out.require_congruent(fields[k], "superpose");
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += fields[k].values[i];
  }
  return out;
}

}  // namespace unwrapforge
