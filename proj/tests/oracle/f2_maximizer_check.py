#!/usr/bin/env python3
"""Checks the closed-form f2 maximizer against region enumeration, and, for
any mismatch, settles which configuration really wins by building both star
forests, joining them with K_{floor t}, and comparing exact walk counts and
numeric spectral radii at growing n.

Region (from the paper's (e8)-(e10) with a,c nonnegative integers):
    a*t0 - (a+c)*phi0 <= beta0
    0 <= c <= m0 - gamma0
    a + c <= alpha0 - 1
Objective: f2(a,c) = a^2 + a + c^2 - 2c(m0 - gamma0 + 1/2)
Closed form: c=0, a = alpha0-1 if t0==phi0 else min(floor(beta0/(t0-phi0)), alpha0-1).
"""

from fractions import Fraction
import itertools
import numpy as np

from constants_oracle import derive


def f2_doubled(a, c, m0, gamma0):
    return 2 * a * a + 2 * a + 2 * c * c - 2 * c * (2 * (m0 - gamma0) + 1)


def closed_form(d):
    if d["t0"] == d["phi0"]:
        a = d["alpha0"] - 1
    else:
        a = min(int(d["beta0"] / (d["t0"] - d["phi0"])), d["alpha0"] - 1)
    return a, 0


def region_argmax(d, gamma0):
    best = None
    for c in range(0, d["m0"] - gamma0 + 1):
        for a in range(0, d["alpha0"] - c):
            if a * d["t0"] - (a + c) * d["phi0"] > d["beta0"]:
                continue
            key = (f2_doubled(a, c, d["m0"], gamma0), -a, -c)
            if best is None or key > best[0]:
                best = (key, (a, c))
    return best[1] if best else None


def star_forest_config(d, gamma0, n_minus_ft, a, c):
    """Vertex-disjoint star orders for G_{(a,b,c)} on n_minus_ft vertices."""
    m0, alpha0 = d["m0"], d["alpha0"]
    b = alpha0 - a - c - 1
    assert b >= 0
    rest = n_minus_ft - (m0 + a + 1) - b * (m0 + 1) - (c + gamma0)
    assert rest >= 0 and rest % m0 == 0
    stars = [m0 + a] + [m0] * b + [m0 - 1] * (rest // m0) + [c + gamma0 - 1]
    assert sum(s + 1 for s in stars) == n_minus_ft
    return stars


def join_adjacency(ft, stars):
    n = ft + sum(s + 1 for s in stars)
    A = np.zeros((n, n))
    A[:ft, :] = 1; A[:, :ft] = 1
    np.fill_diagonal(A, 0)
    v = ft
    for s in stars:
        for leaf in range(1, s + 1):
            A[v, v + leaf] = A[v + leaf, v] = 1
        v += s + 1
    return A

def walk_counts(A, lmax):
    x = np.ones(A.shape[0], dtype=object)
    Ai = A.astype(object).astype(int)
    out = []
    for _ in range(lmax):
        x = Ai @ x
        out.append(int(x.sum()))
    return out


def main():
    rng_ts = [Fraction(p, q) for q in range(1, 12) for p in range(q, 5 * q)]
    rng_rs = [Fraction(p, q) for q in range(1, 7) for p in range(-2 * q, 4 * q)]
    mismatches = []
    for t in rng_ts:
        for r in rng_rs:
            ft = int(t)
            if r < -Fraction((ft + 1) * ft, 2):
                continue
            d = derive(t, r)
            if d["alpha0"] < 1:
                continue
            for gamma0 in range(1, d["m0"] + 1):
                cf, rm = closed_form(d), region_argmax(d, gamma0)
                if cf != rm:
                    mismatches.append((t, r, gamma0, cf, rm, d))
    print(f"scanned small rationals; mismatches: {len(mismatches)}")
    for t, r, gamma0, cf, rm, d in mismatches[:8]:
        print(f"  t={t} r={r} gamma0={gamma0}: closed-form {cf} "
              f"f2x2={f2_doubled(*cf, d['m0'], gamma0)}, region argmax {rm} "
              f"f2x2={f2_doubled(*rm, d['m0'], gamma0)} "
              f"(alpha0={d['alpha0']} beta0={d['beta0']} t0={d['t0']} phi0={d['phi0']})")

    if not mismatches:
        return

    # settle the first mismatch by direct computation
    t, r, gamma0, cf, rm, d = mismatches[0]
    ft = int(t)
    g0, t0 = d["g0"], d["t0"]
    for n in (17, 31, 61, 121):
        nm = n - ft
        if (nm - d["alpha0"] - gamma0) % d["m0"] or nm < d["alpha0"] + gamma0:
            continue
        sc = star_forest_config(d, gamma0, nm, *cf)
        sa = star_forest_config(d, gamma0, nm, *rm)
        # both must satisfy P_{t,r}: eta^+ <= g0 via Lemma "join iff" route
        for stars in (sc, sa):
            etap = sum(max(Fraction(0), s + (ft - t) * (s + 1)) for s in stars)
            assert etap <= g0, (stars, etap, g0)
        Ac, Aa = join_adjacency(ft, sc), join_adjacency(ft, sa)
        assert Ac.sum() == Aa.sum(), "edge counts must agree"
        rc = np.linalg.eigvalsh(Ac)[-1]
        ra = np.linalg.eigvalsh(Aa)[-1]
        wc, wa = walk_counts(Ac, 4), walk_counts(Aa, 4)
        print(f"n={n}: rho(closed-form)={rc:.12f} rho(region-max)={ra:.12f} "
              f"region wins: {ra > rc};  W1..W4 cf={wc} rm={wa}")


if __name__ == "__main__":
    main()
