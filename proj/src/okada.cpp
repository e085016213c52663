#include "unwrapforge/okada.hpp"

#include <cmath>
#include <numbers>

#include "unwrapforge/errors.hpp"

namespace unwrapforge {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kElast = 0.5;  // mu/(lambda+mu), Poisson solid
constexpr double kTinyArg = 1e-14;

struct FaultGeom {
  double sd, cd;  // sin/cos dip
  double q;       // constant for a fixed observation point
};

struct Terms {
  double R, ytil, dtil, inv_Reta, ln_Reta;
  double I1, I2, I3, I4, I5;
  double theta;
};

Terms halfspace_terms(double xi, double eta, const FaultGeom& g) {
  Terms t;
  const double q = g.q;
  t.R = std::sqrt(xi * xi + eta * eta + q * q);
  const double X = std::sqrt(xi * xi + q * q);
  t.ytil = eta * g.cd + q * g.sd;
  t.dtil = eta * g.sd - q * g.cd;

  // R+eta vanishes only on the down-dip fault-plane extension; the companion
  // terms vanish there too (Okada's limiting forms).
  if (std::abs(t.R + eta) < kTinyArg) {
    t.ln_Reta = -std::log(t.R - eta);
    t.inv_Reta = 0.0;
  } else {
    t.ln_Reta = std::log(t.R + eta);
    t.inv_Reta = 1.0 / (t.R + eta);
  }

  if (std::abs(xi) < kTinyArg) {
    t.I5 = 0.0;
  } else if (g.cd != 0.0) {
    t.I5 = (kElast * 2.0 / g.cd) *
           std::atan((eta * (X + q * g.cd) + X * (t.R + X) * g.sd) /
                     (xi * (t.R + X) * g.cd));
  } else {
    t.I5 = -kElast * xi * g.sd / (t.R + t.dtil);
  }

  if (g.cd != 0.0) {
    t.I4 = kElast / g.cd * (std::log(t.R + t.dtil) - g.sd * t.ln_Reta);
    t.I3 = kElast * (t.ytil / (g.cd * (t.R + t.dtil)) - t.ln_Reta) + g.sd / g.cd * t.I4;
    t.I1 = kElast * (-xi / (g.cd * (t.R + t.dtil))) - g.sd / g.cd * t.I5;
  } else {
    const double rd = t.R + t.dtil;
    t.I4 = -kElast * q / rd;
    t.I3 = kElast / 2.0 * (eta / rd + t.ytil * q / (rd * rd) - t.ln_Reta);
    t.I1 = -kElast / 2.0 * xi * q / (rd * rd);
  }
  t.I2 = kElast * (-t.ln_Reta) - t.I3;

  t.theta = (std::abs(q) < kTinyArg) ? 0.0 : std::atan(xi * eta / (q * t.R));
  return t;
}

std::array<double, 3> f_strike(double xi, double eta, const FaultGeom& g) {
  const Terms t = halfspace_terms(xi, eta, g);
  const double q = g.q;
  return {xi * q / t.R * t.inv_Reta + t.theta + t.I1 * g.sd,
          t.ytil * q / t.R * t.inv_Reta + q * g.cd * t.inv_Reta + t.I2 * g.sd,
          t.dtil * q / t.R * t.inv_Reta + q * g.sd * t.inv_Reta + t.I4 * g.sd};
}

std::array<double, 3> f_dip(double xi, double eta, const FaultGeom& g) {
  const Terms t = halfspace_terms(xi, eta, g);
  const double q = g.q;
  const double rxi = (std::abs(t.R + xi) < kTinyArg) ? 0.0 : 1.0 / (t.R + xi);
  return {q / t.R - t.I3 * g.sd * g.cd,
          t.ytil * q / t.R * rxi + g.cd * t.theta - t.I1 * g.sd * g.cd,
          t.dtil * q / t.R * rxi + g.sd * t.theta - t.I5 * g.sd * g.cd};
}

template <typename F>
std::array<double, 3> chinnery(F f, double x, double p, double L, double W,
                               const FaultGeom& g) {
  const auto a = f(x, p, g);
  const auto b = f(x, p - W, g);
  const auto c = f(x - L, p, g);
  const auto d = f(x - L, p - W, g);
  return {a[0] - b[0] - c[0] + d[0], a[1] - b[1] - c[1] + d[1],
          a[2] - b[2] - c[2] + d[2]};
}

}  // namespace

void FaultSource::validate() const {
  if (!(depth > 0.0) && !surface_breaking)
    throw ConfigError("fault source: depth must be > 0 unless surface-breaking");
  if (depth < 0.0) throw ConfigError("fault source: negative depth");
  if (!(dip > 0.0) || dip > 90.0) throw ConfigError("fault source: dip must be in (0, 90]");
  if (slip < 0.0) throw ConfigError("fault source: slip must be >= 0");
  if (!(length > 0.0) || !(width > 0.0))
    throw ConfigError("fault source: length and width must be > 0");
}

void FractureSpec::validate() const {
  const double n2 = normal[0] * normal[0] + normal[1] * normal[1];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-9)
    throw ConfigError("fracture: normal must have unit norm");
}

std::array<double, 3> okada_fault_frame(double x, double y, double d_bottom,
                                        double dip_deg, double length, double width,
                                        double slip_strike, double slip_dip) {
  FaultGeom g;
  g.sd = std::sin(dip_deg * kPi / 180.0);
  g.cd = std::cos(dip_deg * kPi / 180.0);
  if (std::abs(g.cd) < 1e-12) g.cd = 0.0;  // vertical-fault branch of the I terms
  const double p = y * g.cd + d_bottom * g.sd;
  g.q = y * g.sd - d_bottom * g.cd;

  std::array<double, 3> u = {0.0, 0.0, 0.0};
  if (slip_strike != 0.0) {
    const auto s = chinnery(f_strike, x, p, length, width, g);
    for (int i = 0; i < 3; ++i) u[i] += -slip_strike / (2.0 * kPi) * s[i];
  }
  if (slip_dip != 0.0) {
    const auto s = chinnery(f_dip, x, p, length, width, g);
    for (int i = 0; i < 3; ++i) u[i] += -slip_dip / (2.0 * kPi) * s[i];
  }
  return u;
}

DisplacementField okada_displacement(const FaultSource& source, const GridMeta& meta,
                                     int width, int height) {
  source.validate();
  meta.validate();

  GridMeta dm = meta;
  dm.kind = GridKind::Displacement;
  DisplacementField out{PhaseGrid(width, height, 0.0, dm), PhaseGrid(width, height, 0.0, dm),
                        PhaseGrid(width, height, 0.0, dm)};
  if (source.slip == 0.0) return out;

  const double alpha = source.strike * kPi / 180.0;
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double sd = std::sin(source.dip * kPi / 180.0);
  double cd = std::cos(source.dip * kPi / 180.0);
  if (std::abs(cd) < 1e-12) cd = 0.0;
  const double L = source.length, W = source.width;
  const double d_bottom = source.depth + W * sd;

  // Bottom-edge start corner, surface projection. Down-dip horizontal
  // direction is (cos a, -sin a) in (east, north).
  const double bx = source.center_east + ca * W * cd - sa * L / 2.0;
  const double by = source.center_north - sa * W * cd - ca * L / 2.0;

  const double rake = source.rake * kPi / 180.0;
  const double u_strike = source.slip * std::cos(rake);
  const double u_dip = source.slip * std::sin(rake);

  // Surface projections of the four fault-plane edges, in fault coordinates:
  // xi in {0, L}, y in {0, W*cd}. A grid node within 1e-6 m of one of those
  // lines gets nudged off it so the raster stays finite.
  const auto nudge = [&](double& x, double& y) {
    const double edge_eps = 1e-6;
    const bool near_xi = std::abs(x) < edge_eps || std::abs(x - L) < edge_eps;
    const bool near_y = std::abs(y) < edge_eps || std::abs(y - W * cd) < edge_eps;
    const bool inside_xi = x > -edge_eps && x < L + edge_eps;
    const bool inside_y = y > -edge_eps && y < W * cd + edge_eps;
    if ((near_xi && inside_y) || (near_y && inside_xi)) {
      // 1e-3 m along grid east, expressed in fault coordinates
      x += 1e-3 * sa;
      y += -1e-3 * ca;
    }
  };

  for (int r = 0; r < height; ++r) {
    const double n = out.east.north(r);
    for (int c = 0; c < width; ++c) {
      const double e = out.east.east(c);
      const double rE = e - bx, rN = n - by;
      double x = rE * sa + rN * ca;
      double y = -(rE * ca - rN * sa);
      nudge(x, y);
      const auto u = okada_fault_frame(x, y, d_bottom, source.dip, L, W, u_strike, u_dip);
      const std::size_t i = out.east.idx(r, c);
      out.east.values[i] = u[0] * sa - u[1] * ca;
      out.north.values[i] = u[0] * ca + u[1] * sa;
      out.up.values[i] = u[2];
    }
  }
  out.east.require_finite("okada_displacement east");
  out.north.require_finite("okada_displacement north");
  out.up.require_finite("okada_displacement up");
  return out;
}

PhaseGrid project_los(const DisplacementField& disp, const GridMeta& meta) {
  meta.validate();
  disp.east.require_congruent(disp.north, "project_los");
  disp.east.require_congruent(disp.up, "project_los");
  PhaseGrid out = disp.east;
  out.meta = meta;
  out.meta.kind = GridKind::Unwrapped;
  const double scale = 4.0 * kPi / meta.wavelength;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = scale * (disp.east.values[i] * meta.los[0] +
                             disp.north.values[i] * meta.los[1] +
                             disp.up.values[i] * meta.los[2]);
  }
  return out;
}

PhaseGrid apply_fracture(const PhaseGrid& phi, const FractureSpec& frac) {
  frac.validate();
  PhaseGrid out = phi;
  for (int r = 0; r < out.height; ++r) {
    for (int c = 0; c < out.width; ++c) {
      const double s = (out.east(c) - frac.anchor[0]) * frac.normal[0] +
                       (out.north(r) - frac.anchor[1]) * frac.normal[1];
      if (s > 0.0)
        out.at(r, c) += frac.delta;
      else if (s < 0.0)
        out.at(r, c) -= frac.delta;
    }
  }
  return out;
}

}  // namespace unwrapforge
