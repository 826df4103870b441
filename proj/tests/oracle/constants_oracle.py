#!/usr/bin/env python3
"""Independent oracle for the derived constants and closed-form bounds.

Computes everything from first principles with exact fractions, so the
values frozen into the C++ unit tests have a second derivation path.
"""

from fractions import Fraction
from math import ceil, floor, sqrt, comb


def derive(t: Fraction, r: Fraction):
    ft = floor(t)
    t0 = ft + 1 - t
    assert 0 < t0 <= 1
    g0 = t * ft + r - Fraction(comb(ft, 2))
    assert g0 >= 0, f"inadmissible r for t={t}: g0={g0}"
    s = ceil((t * (ft + 1) + r) / (ft + 1 - t)) + 1
    m0 = floor(Fraction(1) / t0)
    phi0 = (1 + m0) * t0 - 1
    assert 0 < phi0 <= t0
    alpha0 = floor(g0 / phi0)
    beta0 = g0 - alpha0 * phi0
    assert 0 <= beta0 < phi0
    return dict(floor_t=ft, s=s, t0=t0, g0=g0, m0=m0, phi0=phi0,
                alpha0=alpha0, beta0=beta0)


def bound_t0(t: int, r: Fraction, n: int) -> float:
    return (t - 1) / 2 + sqrt(t * (t + 1) + 2 * r) + sqrt(t * n)


def bound_t2(t: Fraction, r: Fraction, n: int) -> float:
    d = derive(t, r)
    s, ft = d["s"], d["floor_t"]
    disc = (s + ft - 2) ** 2 / 4 + ft * n - ft * ft - (s - 1) * (ft - 1)
    return (s + ft - 2) / 2 + sqrt(disc)


def main():
    print("== derive_constants ==")
    for t, r in [(Fraction(3, 2), Fraction(0)), (Fraction(2), Fraction(0)),
                 (Fraction(1), Fraction(0)), (Fraction(1), Fraction(-1)),
                 (Fraction(7, 3), Fraction(0)), (Fraction(7, 3), Fraction(-2)),
                 (Fraction(11, 7), Fraction(0)), (Fraction(5, 2), Fraction(1))]:
        d = derive(t, r)
        print(f"t={t} r={r}: {d}  (s>t+1: {d['s'] > t + 1})")

    print("\n== bounds ==")
    print("bound_t0(1,0,9)  =", bound_t0(1, Fraction(0), 9))
    print("bound_t0(2,0,8)  =", bound_t0(2, Fraction(0), 8))
    print("bound_t0(1,0,1)  =", bound_t0(1, Fraction(0), 1))
    print("bound_t2(2,0,10) =", bound_t2(Fraction(2), Fraction(0), 10))
    print("bound_t2(1,0,9)  =", bound_t2(Fraction(1), Fraction(0), 9))
    print("bound_t2(3/2,0,10) =", bound_t2(Fraction(3, 2), Fraction(0), 10))


if __name__ == "__main__":
    main()
