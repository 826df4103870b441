#!/usr/bin/env python3
"""First-run oracle for the small-n exhaustive searches.

Enumerates every labeled graph on n vertices with numpy, keeps those whose
induced subgraphs all satisfy e(S) <= t|S| + r (exact thresholds via
Fraction), takes the spectral-radius maximizers within 1e-9, dedups them up
to isomorphism by brute-force permutation, and freezes the result as JSON.
Written independently of the library it will later judge; graph6 strings
come from networkx.
"""

import itertools
import json
import sys
from fractions import Fraction
from math import comb, floor, ceil

import networkx as nx
import numpy as np


def pair_index(n):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return {p: k for k, p in enumerate(pairs)}, pairs


def property_mask(n, t: Fraction, r: Fraction, masks):
    pidx, _ = pair_index(n)
    ok = np.ones(masks.shape, dtype=bool)
    for sz in range(max(1, ceil(t)), n + 1):
        for S in itertools.combinations(range(n), sz):
            es = 0
            for i, j in itertools.combinations(S, 2):
                es |= 1 << pidx[(i, j)]
            thr = floor(t * sz + r)
            if thr >= comb(sz, 2):
                continue
            ok &= np.bitwise_count(masks & np.uint32(es)) <= thr
    return ok


def adjacency_batch(n, masks):
    _, pairs = pair_index(n)
    A = np.zeros((masks.size, n, n))
    for k, (i, j) in enumerate(pairs):
        bit = ((masks >> np.uint32(k)) & np.uint32(1)).astype(float)
        A[:, i, j] = bit
        A[:, j, i] = bit
    return A


def canon(n, mask, pidx):
    adj = [[False] * n for _ in range(n)]
    for (i, j), k in pidx.items():
        if (mask >> k) & 1:
            adj[i][j] = adj[j][i] = True
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(adj[perm[i]][perm[j]] for j in range(1, n) for i in range(j))
        if best is None or bits < best:
            best = bits
    return best


def mask_to_g6(n, mask, pidx):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for (i, j), k in pidx.items():
        if (mask >> k) & 1:
            g.add_edge(i, j)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def construction(t: Fraction, r: Fraction, n: int):
    """Star orders of the paper's extremal forest, or None if n is too small."""
    ft = int(t)
    t0 = ft + 1 - t
    g0 = t * ft + r - comb(ft, 2)
    if 3 * t0 <= g0 < 8 * t0 - 4:
        if n - ft - 3 < 0:
            return None
        return ft, [0] * (n - ft - 3), "triangle"
    m0 = floor(Fraction(1) / t0)
    phi0 = (1 + m0) * t0 - 1
    alpha0 = floor(g0 / phi0)
    beta0 = g0 - alpha0 * phi0
    rem = n - ft - alpha0
    if rem < 1:
        return None
    gamma0 = (rem - 1) % m0 + 1
    n0 = (rem - gamma0) // m0
    if alpha0 == 0:
        stars = [m0 - 1] * (n0 + (1 if gamma0 == m0 else 0))
        if gamma0 < m0:
            stars += [gamma0 - 1]
        return ft, stars, "star"
    a = alpha0 - 1 if t0 == phi0 else min(int(beta0 / (t0 - phi0)), alpha0 - 1)
    b = alpha0 - a - 1
    small = n0 - b if gamma0 == m0 else n0 - b - 1
    if small < 0 or n0 < 0:
        return None
    stars = [m0 + a] + [m0] * b + [m0 - 1] * small
    if gamma0 < m0:
        stars += [gamma0 - 1]
    return ft, stars, "star"


def construction_mask(n, t, r, pidx):
    c = construction(t, r, n)
    if c is None:
        return None
    ft, stars, branch = c
    mask = 0
    for i in range(ft):
        for j in range(i + 1, n):
            mask |= 1 << pidx[(i, j)]
    v = ft
    if branch == "triangle":
        mask |= 1 << pidx[(v, v + 1)]
        mask |= 1 << pidx[(v, v + 2)]
        mask |= 1 << pidx[(v + 1, v + 2)]
        v += 3
    assert v + sum(s + 1 for s in stars) == n
    for s in stars:
        for leaf in range(1, s + 1):
            mask |= 1 << pidx[(v, v + leaf)]
        v += s + 1
    return mask


def run(t: Fraction, r: Fraction, n: int):
    pidx, _ = pair_index(n)
    m = comb(n, 2)
    masks = np.arange(1 << m, dtype=np.uint32)
    ok = property_mask(n, t, r, masks)
    sat = masks[ok]
    best_rho, cand = -1.0, []
    for lo in range(0, sat.size, 200_000):
        chunk = sat[lo:lo + 200_000]
        rho = np.linalg.eigvalsh(adjacency_batch(n, chunk))[:, -1]
        mx = float(rho.max())
        best_rho = max(best_rho, mx)
        keep = rho >= best_rho - 1e-9
        cand += list(zip(chunk[keep].tolist(), rho[keep].tolist()))
    cand = [(mk, rho) for mk, rho in cand if rho >= best_rho - 1e-9]
    cand.sort()
    classes = {}
    for mk, _ in cand:
        classes.setdefault(canon(n, mk, pidx), mk)
    reps = sorted(classes.values())

    cmask = construction_mask(n, t, r, pidx)
    agrees = None
    if cmask is not None:
        agrees = canon(n, cmask, pidx) in classes
    return {
        "t": str(t), "r": str(r), "n": n,
        "satisfying_count": int(ok.sum()),
        "max_rho": best_rho,
        "maximizers": [mask_to_g6(n, mk, pidx) for mk in reps],
        "construction_g6": None if cmask is None else mask_to_g6(n, cmask, pidx),
        "construction_agrees": agrees,
    }


def main():
    import os
    outdir = os.path.join(os.path.dirname(__file__), "..", "golden")
    os.makedirs(outdir, exist_ok=True)
    for t, r in [(Fraction(1), Fraction(0)), (Fraction(2), Fraction(0)),
                 (Fraction(3, 2), Fraction(0))]:
        for n in (5, 6, 7):
            rep = run(t, r, n)
            name = f"search_t{t.numerator}-{t.denominator}_r{r.numerator}-{r.denominator}_n{n}.json"
            with open(os.path.join(outdir, name), "w") as f:
                json.dump(rep, f, indent=1)
                f.write("\n")
            print(name, "->", {k: rep[k] for k in
                               ("satisfying_count", "max_rho", "maximizers",
                                "construction_g6", "construction_agrees")})


if __name__ == "__main__":
    main()
