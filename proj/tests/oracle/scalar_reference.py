#!/usr/bin/env python3
"""Scalar reference evaluations used to freeze expected values in the C++
tests. Each block is an independent closed-form evaluation, kept outside the
production code path on purpose."""

import math


def cosine_alpha_cum(t, T, s=0.008):
    def f(u):
        return math.cos(((u / T + s) / (1.0 + s)) * math.pi / 2.0) ** 2
    return f(t) / f(0)


def hann_coeff(i, N, floor=1e-3):
    return floor + (1.0 - floor) * math.sin(math.pi * (i + 0.5) / N) ** 2


def ddim_sigma(eta, a_t, a_prev):
    return eta * math.sqrt((1.0 - a_prev) / (1.0 - a_t)) * math.sqrt(1.0 - a_t / a_prev)


def ddim_x0(x_t, eps_hat, a_t):
    return (x_t - math.sqrt(1.0 - a_t) * eps_hat) / math.sqrt(a_t)


def main():
    print("los phase, u_up=0.01 m, lambda=0.0556 m, l=(0,0,1):",
          f"{4.0 * math.pi * 0.01 / 0.0556:.12f}")
    print("cosine alpha_cum t=500, T=1000:",
          f"{cosine_alpha_cum(500, 1000):.15f}")
    print("cosine alpha_cum t=1,    T=1000:",
          f"{cosine_alpha_cum(1, 1000):.15f}")
    print("cosine alpha_cum t=1000, T=1000:",
          f"{cosine_alpha_cum(1000, 1000):.15f}")
    print("hann h(i), N=4:", [f"{hann_coeff(i, 4):.6f}" for i in range(4)])
    print("ddim sigma, eta=1, a_t=0.25, a_prev=0.5:",
          f"{ddim_sigma(1.0, 0.25, 0.5):.12f}")
    print("ddim x0_hat, x_t=1, eps=0.5, a_t=0.25:",
          f"{ddim_x0(1.0, 0.5, 0.25):.12f}")
    print("exp(-1) covariance ratio:", f"{math.exp(-1.0):.12f}")


if __name__ == "__main__":
    main()
