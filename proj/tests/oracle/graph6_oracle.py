#!/usr/bin/env python3
"""Cross-checks the graph6 bit layout against networkx before the codec's
test vectors are frozen: encodes the spec's reference graphs plus random
graphs with a from-scratch encoder and demands byte equality."""

import random
import networkx as nx


def encode(n, edges):
    assert n <= 62
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if ((i, j) in edges or (j, i) in edges) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def nx_g6(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main():
    cases = [(1, []), (2, []), (2, [(0, 1)]), (0, []),
             (4, [(0, 1), (0, 2), (0, 3)]), (3, [(0, 1), (0, 2), (1, 2)])]
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 21)
        edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < 0.4]
        cases.append((n, edges))
    for n, edges in cases:
        mine, theirs = encode(n, edges), nx_g6(n, edges)
        assert mine == theirs, (n, edges, mine, theirs)
    print("named cases:")
    for n, edges in cases[:6]:
        print(f"  n={n} edges={edges} -> {encode(n, edges)!r}")
    print(f"all {len(cases)} encodings match networkx")


if __name__ == "__main__":
    main()
