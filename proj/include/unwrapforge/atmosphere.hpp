#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "unwrapforge/grid.hpp"

namespace unwrapforge {

struct TurbulenceParams {
  double sigma = 1.0;        // rad, marginal std dev, >= 0
  double corr_length = 5000.0;  // m, > 0
  void validate() const;
};

enum class StratifiedMode { SyntheticDem, ExternalZtd };

struct StratifiedParams {
  StratifiedMode mode = StratifiedMode::SyntheticDem;
  double coefficient = 2e-3;  // rad per meter of elevation (synthetic mode)
  // synthetic mode: elevation raster congruent with the scene grid
  PhaseGrid elevation;
  // external mode: zenith-delay raster (radians) with its registration in
  // scene coordinates (position of pixel (0,0) centre and spacing, meters)
  PhaseGrid ztd;
  double ztd_origin_east = 0.0;
  double ztd_origin_north = 0.0;
  double ztd_spacing_x = 0.0;
  double ztd_spacing_y = 0.0;
};

struct PatchyNoiseParams {
  double coverage = 0.15;       // fraction in [0.05, 0.30]
  double smoothing_scale = 6.0; // px, > 0
  double offset_min = 0.0;      // rad, offsets drawn from [offset_min, offset_max)
  double offset_max = 6.283185307179586;
  void validate() const;
};

// Zenith delay mapped to slant range by the vertical LOS component.
// Synthetic: S = k * h / l_up. External: bilinear sample of the ZTD raster
// at each scene node, then the same slant scaling. Rejects grazing geometry
// (l_up == 0) and ZTD rasters that do not cover the scene footprint.
PhaseGrid stratified_delay(const StratifiedParams& params, const GridMeta& meta,
                           int width, int height);

// Zero-mean stationary Gaussian field with covariance
// sigma^2 * exp(-dist/corr_length). Dense Cholesky up to 16384 pixels;
// larger grids are sampled on a coarse grid, bicubic-upsampled, and topped
// up with independent fine-scale residual matching the short-range variance
// deficit. Deterministic given the seed.
PhaseGrid sample_turbulence(const TurbulenceParams& params, int width, int height,
                            const GridMeta& meta, std::uint64_t seed);

// Patches = {smoothed standard-normal field above its (1-coverage) quantile};
// each 4-connected patch gets one uniform offset. Grids below 100 px are
// rejected.
std::pair<PhaseGrid, std::vector<std::uint8_t>> sample_patchy_noise(
    const PatchyNoiseParams& params, int width, int height, std::uint64_t seed);

// i.i.d. zero-mean Gaussian per pixel.
PhaseGrid sample_measurement_noise(double std_dev, int width, int height,
                                   std::uint64_t seed);

// Fractal elevation surface (power-law spectrum, exponent -2), min-max scaled
// to [0, relief] meters. Used as the synthetic-DEM input of stratified_delay.
PhaseGrid synthesize_dem(int width, int height, double relief, std::uint64_t seed);

// Separable Gaussian blur, kernel truncated at 3 sigma, border-renormalized.
void gaussian_blur(std::vector<double>& field, int width, int height, double sigma);

// Max-norm residual ||L L^T - C|| of the factor used for the given turbulence
// configuration; exposed for verification.
double turbulence_factor_residual(const TurbulenceParams& params, int width, int height,
                                  const GridMeta& meta);

}  // namespace unwrapforge
