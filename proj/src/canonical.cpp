#include <algorithm>
#include <cstdint>

#include "hbp/graph.hpp"
#include "hbp/graph6.hpp"

namespace hbp {

namespace {

// Branch-and-bound over relabelings. Slot p receives a vertex whose degree
// matches the fixed degree profile (nonincreasing), and the bits of column p
// of the upper triangle extend the accumulator; prefixes already worse than
// the best known labeling are cut. C(10,2) = 45 bits, one word is enough.
struct Canonicalizer {
    int n;
    const Graph& g;
    std::vector<int> slot_degree;
    std::vector<int> perm;
    std::vector<bool> used;
    std::uint64_t best = ~0ULL;
    int total_bits;

    explicit Canonicalizer(const Graph& graph) : n(graph.order()), g(graph) {
        slot_degree = degree_sequence(g);
        perm.assign(n, -1);
        used.assign(n, false);
        total_bits = n * (n - 1) / 2;
    }

    void dfs(int p, std::uint64_t acc, int bits) {
        if (p == n) {
            if (acc < best) best = acc;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != slot_degree[p]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < p; ++i) col = (col << 1) | (g.has_edge(perm[i], v) ? 1 : 0);
            std::uint64_t acc2 = (acc << p) | col;
            int bits2 = bits + p;
            if (best != ~0ULL && acc2 > (best >> (total_bits - bits2))) continue;
            used[v] = true;
            perm[p] = v;
            dfs(p + 1, acc2, bits2);
            used[v] = false;
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 10) throw LimitError("canonical_form capped at order 10");
    if (n == 0) return encode_graph6(g);
    Canonicalizer c(g);
    c.dfs(0, 0, 0);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t bits = c.best;
    int pos = c.total_bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((bits >> --pos) & 1) edges.emplace_back(u, v);
    return encode_graph6(Graph(n, std::move(edges)));
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() > 10 || g2.order() > 10)
        throw LimitError("is_isomorphic capped at order 10");
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (degree_sequence(g1) != degree_sequence(g2)) return false;
    return canonical_form(g1) == canonical_form(g2);
}

}  // namespace hbp
