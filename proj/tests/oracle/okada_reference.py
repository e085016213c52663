#!/usr/bin/env python3
"""Independent reference implementation of the Okada (1985) rectangular
dislocation surface displacement, used only to freeze checkpoint values for
the C++ tests. Kept deliberately separate from the production code path.

Conventions (must match unwrapforge::okada_displacement):
  - Uniform Poisson half-space, nu = 0.25, i.e. mu/(lambda+mu) = 0.5.
  - FaultSource: (center_east, center_north) is the surface projection of the
    centre of the fault's TOP edge; depth is to the top edge; the fault dips
    to the right of the strike direction; rake is measured CCW from strike
    (Aki-Richards), U1 = slip*cos(rake), U2 = slip*sin(rake).
  - Okada fault frame: x along strike, y up-dip horizontal, z up; the fault
    bottom edge lies on the x axis at depth d_bottom.

Self-check: Table 2 of the original paper, case 2 (x=2, y=3, d=4, dip=70deg,
L=3, W=2, unit slip): strike-slip (-8.689e-3, -4.298e-3, -2.747e-3),
dip-slip (-4.682e-3, -3.527e-2, -3.564e-2), 4 significant digits.
"""

import math
import sys

ELAST = 0.5  # mu/(lambda+mu) for a Poisson solid (nu = 0.25)
EPS = 1e-14


def _halfspace_terms(xi, eta, q, sd, cd):
    """I1..I5 and shared geometry terms of the finite-fault solution."""
    R = math.sqrt(xi * xi + eta * eta + q * q)
    X = math.sqrt(xi * xi + q * q)
    ytil = eta * cd + q * sd
    dtil = eta * sd - q * cd

    if abs(R + eta) < EPS:
        ln_Reta = -math.log(R - eta)
        inv_Reta = 0.0
    else:
        ln_Reta = math.log(R + eta)
        inv_Reta = 1.0 / (R + eta)

    if abs(xi) < EPS:
        I5 = 0.0
    elif abs(cd) > EPS:
        I5 = (ELAST * 2.0 / cd) * math.atan(
            (eta * (X + q * cd) + X * (R + X) * sd) / (xi * (R + X) * cd)
        )
    else:
        I5 = -ELAST * xi * sd / (R + dtil)

    if abs(cd) > EPS:
        I4 = ELAST / cd * (math.log(R + dtil) - sd * ln_Reta)
        I3 = ELAST * (ytil / (cd * (R + dtil)) - ln_Reta) + sd / cd * I4
        I1 = ELAST * (-xi / (cd * (R + dtil))) - sd / cd * I5
    else:
        I4 = -ELAST * q / (R + dtil)
        I3 = ELAST / 2.0 * (eta / (R + dtil) + ytil * q / (R + dtil) ** 2 - ln_Reta)
        I1 = -ELAST / 2.0 * xi * q / (R + dtil) ** 2
    I2 = ELAST * (-ln_Reta) - I3

    if abs(q) < EPS:
        theta = 0.0
    else:
        theta = math.atan(xi * eta / (q * R))

    return R, ytil, dtil, inv_Reta, ln_Reta, I1, I2, I3, I4, I5, theta


def _f_strike(xi, eta, q, sd, cd):
    R, ytil, dtil, inv_Reta, _, I1, I2, _, I4, _, theta = _halfspace_terms(xi, eta, q, sd, cd)
    ux = xi * q / R * inv_Reta + theta + I1 * sd
    uy = ytil * q / R * inv_Reta + q * cd * inv_Reta + I2 * sd
    uz = dtil * q / R * inv_Reta + q * sd * inv_Reta + I4 * sd
    return ux, uy, uz


def _f_dip(xi, eta, q, sd, cd):
    R, ytil, dtil, _, _, I1, _, I3, _, I5, theta = _halfspace_terms(xi, eta, q, sd, cd)
    rxi = 0.0 if abs(R + xi) < EPS else 1.0 / (R + xi)
    ux = q / R - I3 * sd * cd
    uy = ytil * q / R * rxi + cd * theta - I1 * sd * cd
    uz = dtil * q / R * rxi + sd * theta - I5 * sd * cd
    return ux, uy, uz


def _chinnery(f, x, p, q, L, W, sd, cd):
    a = f(x, p, q, sd, cd)
    b = f(x, p - W, q - W * 0.0, sd, cd)  # q does not depend on eta; see below
    # q is constant over the fault plane for a fixed observation point, so the
    # Chinnery substitution only shifts (xi, eta).
    b = f(x, p - W, q, sd, cd)
    c = f(x - L, p, q, sd, cd)
    d = f(x - L, p - W, q, sd, cd)
    return tuple(a[i] - b[i] - c[i] + d[i] for i in range(3))


def okada_fault_frame(x, y, d_bottom, dip_deg, L, W, U1, U2):
    """Surface displacement (ux, uy, uz) in the fault frame."""
    sd = math.sin(math.radians(dip_deg))
    cd = math.cos(math.radians(dip_deg))
    if abs(cd) < 1e-12:
        cd = 0.0
    p = y * cd + d_bottom * sd
    q = y * sd - d_bottom * cd
    u = [0.0, 0.0, 0.0]
    if U1 != 0.0:
        ss = _chinnery(_f_strike, x, p, q, L, W, sd, cd)
        for i in range(3):
            u[i] += -U1 / (2.0 * math.pi) * ss[i]
    if U2 != 0.0:
        ds = _chinnery(_f_dip, x, p, q, L, W, sd, cd)
        for i in range(3):
            u[i] += -U2 / (2.0 * math.pi) * ds[i]
    return tuple(u)


def okada_surface(east, north, src):
    """Displacement (uE, uN, uU) for a FaultSource-style dict."""
    alpha = math.radians(src["strike"])
    sa, ca = math.sin(alpha), math.cos(alpha)
    dip = src["dip"]
    sd = math.sin(math.radians(dip))
    cd = math.cos(math.radians(dip))
    L, W = src["length"], src["width"]
    d_bottom = src["depth"] + W * sd
    # bottom edge start corner (surface projection)
    bx = src["center_east"] + ca * W * cd - sa * L / 2.0
    by = src["center_north"] - sa * W * cd - ca * L / 2.0
    rE, rN = east - bx, north - by
    x = rE * sa + rN * ca           # along strike
    y = -(rE * ca - rN * sa)        # up-dip horizontal (fault dips right of strike)
    rake = math.radians(src["rake"])
    U1 = src["slip"] * math.cos(rake)
    U2 = src["slip"] * math.sin(rake)
    ux, uy, uz = okada_fault_frame(x, y, d_bottom, dip, L, W, U1, U2)
    uE = ux * sa - uy * ca
    uN = ux * ca + uy * sa
    return uE, uN, uz


def self_check():
    # Published table, case 2: x=2, y=3, d=4, dip=70, L=3, W=2.
    ss = okada_fault_frame(2.0, 3.0, 4.0, 70.0, 3.0, 2.0, 1.0, 0.0)
    ds = okada_fault_frame(2.0, 3.0, 4.0, 70.0, 3.0, 2.0, 0.0, 1.0)
    ref_ss = (-8.689e-3, -4.298e-3, -2.747e-3)
    ref_ds = (-4.682e-3, -3.527e-2, -3.564e-2)
    ok = True
    for got, ref, name in ((ss, ref_ss, "strike-slip"), (ds, ref_ds, "dip-slip")):
        for g, r in zip(got, ref):
            if abs(g - r) > 5e-4 * max(1.0, abs(r) / abs(r)) * abs(r) + 5e-7:
                ok = False
        print(f"table-2 case-2 {name}: got {tuple(f'{v: .6e}' for v in got)}")
    print(f"table-2 case-2 check: {'OK' if ok else 'MISMATCH'}")
    if not ok:
        sys.exit(1)


CHECKPOINT_SOURCE = {
    "center_east": 0.0,
    "center_north": 0.0,
    "depth": 3000.0,
    "strike": 0.0,
    "dip": 70.0,
    "rake": 0.0,
    "slip": 1.0,
    "length": 10000.0,
    "width": 5000.0,
}

CHECKPOINT_POINTS = [
    (0.0, 0.0),
    (5000.0, 0.0),
    (0.0, 8000.0),
    (-7000.0, -6000.0),
    (12000.0, 15000.0),
]


def main():
    self_check()
    print("\nfive-point checkpoint (east, north) -> (uE, uN, uU) [m]:")
    for e, n in CHECKPOINT_POINTS:
        uE, uN, uU = okada_surface(e, n, CHECKPOINT_SOURCE)
        print(f"  ({e:9.1f}, {n:9.1f}) -> {{{uE:.15e}, {uN:.15e}, {uU:.15e}}},")


if __name__ == "__main__":
    main()
