#pragma once

#include <array>

#include "unwrapforge/grid.hpp"

namespace unwrapforge {

// Rectangular uniform-slip dislocation in a homogeneous elastic half-space
// (Poisson ratio 0.25). (center_east, center_north) is the surface projection
// of the centre of the fault's top edge; depth is to the top edge; the fault
// dips to the right of the strike direction; rake is measured CCW from strike
// so rake 0 is left-lateral strike slip and rake 90 is thrust.
struct FaultSource {
  double center_east = 0.0;   // m, grid frame
  double center_north = 0.0;  // m
  double depth = 5000.0;      // m, > 0 (top edge)
  double strike = 0.0;        // deg [0, 360)
  double dip = 45.0;          // deg (0, 90]
  double rake = 0.0;          // deg [-180, 180)
  double slip = 1.0;          // m, >= 0
  double length = 10000.0;    // m, > 0
  double width = 5000.0;      // m, > 0
  bool surface_breaking = false;  // permits depth == 0

  void validate() const;  // throws ConfigError
};

// Straight fracture trace: the anchored line { p : (p - anchor) . n = 0 }.
struct FractureSpec {
  std::array<double, 2> anchor = {0.0, 0.0};  // m, grid frame (east, north)
  std::array<double, 2> normal = {1.0, 0.0};  // unit 2-vector
  double delta = 0.0;                         // rad, offset magnitude

  void validate() const;
};

struct DisplacementField {
  PhaseGrid east;   // m
  PhaseGrid north;  // m
  PhaseGrid up;     // m
};

// Fault-frame surface displacement (x along strike, y up-dip horizontal,
// z up); the fault bottom edge lies on the x axis at depth d_bottom.
// Exposed for direct checks against published point values.
std::array<double, 3> okada_fault_frame(double x, double y, double d_bottom,
                                        double dip_deg, double length, double width,
                                        double slip_strike, double slip_dip);

// Surface displacement of one source sampled at every node of a grid with the
// given meta and dimensions. Never produces NaN: evaluation points that fall
// on a fault-edge projection are nudged by 1e-3 m along grid east.
DisplacementField okada_displacement(const FaultSource& source, const GridMeta& meta,
                                     int width, int height);

// phi(x) = (4 pi / lambda) * (u(x) . los)
PhaseGrid project_los(const DisplacementField& disp, const GridMeta& meta);

// phi'(p) = phi(p) + delta * sign((p - anchor) . n); pixels on the trace are
// left unmodified.
PhaseGrid apply_fracture(const PhaseGrid& phi, const FractureSpec& frac);

}  // namespace unwrapforge
