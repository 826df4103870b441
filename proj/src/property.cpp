#include "hbp/property.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hbp/maxflow.hpp"

namespace hbp {

Rational eta(const Graph& f, const Params& p) {
    Rational ft(p.t.floor());
    return Rational(f.edge_count()) + (ft - p.t) * Rational(f.order());
}

Rational eta_plus(const Graph& f, const Params& p) {
    Rational sum(0);
    for (const VertexSet& c : components(f)) {
        Rational val = eta(induced_subgraph(f, c), p);
        if (val > Rational(0)) sum = sum + val;
    }
    return sum;
}

namespace {

struct SubsetScan {
    const Graph& g;
    const Params& p;
    int n;
    int min_size;
    std::vector<long> threshold;  // floor(t*k + r) by subset size k
    std::vector<int> stack;
    VertexSet witness;
    long witness_edges = 0;
    bool found = false;

    SubsetScan(const Graph& graph, const Params& params)
        : g(graph), p(params), n(graph.order()), witness(graph.order()) {
        min_size = std::max<long>(1, p.t.ceil());
        threshold.assign(n + 1, 0);
        for (int k = 0; k <= n; ++k) threshold[k] = (p.t * Rational(k) + p.r).floor();
    }

    // Pre-order over subsets extended by ascending vertices = lexicographic
    // member order, so the first hit is the canonical witness.
    bool dfs(int next, std::uint64_t mask, int size, long edges) {
        for (int v = next; v < n; ++v) {
            long e2 = edges + std::popcount(g.adjacency_bits(v) & mask);
            std::uint64_t m2 = mask | (1ULL << v);
            stack.push_back(v);
            if (size + 1 >= min_size && e2 > threshold[size + 1]) {
                witness = VertexSet(n, stack);
                witness_edges = e2;
                found = true;
                return true;
            }
            if (dfs(v + 1, m2, size + 1, e2)) return true;
            stack.pop_back();
        }
        return false;
    }
};

}  // namespace

PropertyVerdict check_property_exhaustive(const Graph& g, const Params& p, int cap) {
    if (Rational(g.order()) < p.t) return PropertyVerdict::ok(Certificate::Vacuous);
    if (g.order() > cap || g.order() > 62)
        throw LimitError("exhaustive property check capped at order " +
                         std::to_string(std::min(cap, 62)));
    SubsetScan scan(g, p);
    if (scan.dfs(0, 0, 0, 0))
        return PropertyVerdict::violated(scan.witness, scan.witness_edges,
                                         p.t * Rational(scan.witness.count()) + p.r);
    return PropertyVerdict::ok(Certificate::Exhaustive);
}

Rational max_density_excess(const Graph& g, const Rational& t) {
    if (!(t > Rational(0))) throw ValidationError("density excess needs t > 0");
    long n = g.order(), m = g.edge_count();
    if (m == 0) return Rational(0);
    std::int64_t q = t.den(), pnum = t.num();
    // source 0, edge nodes 1..m, vertex nodes m+1..m+n, sink m+n+1
    MaxFlow net(static_cast<int>(m + n + 2));
    int sink = static_cast<int>(m + n + 1);
    for (long i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        net.add_edge(0, static_cast<int>(1 + i), q);
        net.add_edge(static_cast<int>(1 + i), static_cast<int>(m + 1 + u), MaxFlow::kInf);
        net.add_edge(static_cast<int>(1 + i), static_cast<int>(m + 1 + v), MaxFlow::kInf);
    }
    for (long v = 0; v < n; ++v) net.add_edge(static_cast<int>(m + 1 + v), sink, pnum);
    std::int64_t cut = net.run(0, sink);
    return Rational(q * m - cut, q);
}

namespace {

// Positive components of f plus their total size and internal edge count.
struct PositivePart {
    std::vector<int> vertices;
    long edge_total = 0;
    Rational eta_plus_value{0};
};

PositivePart positive_part(const Graph& f, const Params& p) {
    PositivePart out;
    for (const VertexSet& c : components(f)) {
        Graph sub = induced_subgraph(f, c);
        Rational val = eta(sub, p);
        if (val > Rational(0)) {
            out.eta_plus_value = out.eta_plus_value + val;
            out.edge_total += sub.edge_count();
            for (int v : c.members()) out.vertices.push_back(v);
        }
    }
    return out;
}

PropertyVerdict join_verdict(const Graph& f, const Params& p, const std::vector<int>& hub,
                             const std::vector<int>& rest, int total_order) {
    DerivedConstants dc = derive_constants(p);
    PositivePart pos = positive_part(f, p);
    if (!(pos.eta_plus_value > dc.g0)) return PropertyVerdict::ok(Certificate::JoinEta);
    long k = dc.floor_t;
    VertexSet w(total_order);
    for (int v : hub) w.add(v);
    for (int v : pos.vertices) w.add(rest[v]);
    long edges = k * (k - 1) / 2 + k * static_cast<long>(pos.vertices.size()) + pos.edge_total;
    return PropertyVerdict::violated(std::move(w), edges,
                                     p.t * Rational(k + static_cast<long>(pos.vertices.size())) +
                                         p.r);
}

}  // namespace

PropertyVerdict check_join_property(const Graph& f, const Params& p) {
    long k = derive_constants(p).floor_t;
    std::vector<int> hub, rest;
    for (long v = 0; v < k; ++v) hub.push_back(static_cast<int>(v));
    for (int v = 0; v < f.order(); ++v) rest.push_back(static_cast<int>(k) + v);
    return join_verdict(f, p, hub, rest, static_cast<int>(k) + f.order());
}

PropertyVerdict check_property(const Graph& g, const Params& p, int cap) {
    if (p.r >= Rational(0) && !(max_density_excess(g, p.t) > p.r))
        return PropertyVerdict::ok(Certificate::FlowCut);
    if (!(p.t < Rational(1))) {
        long k = p.t.floor();
        int n = g.order();
        std::vector<int> universal;
        for (int v = 0; v < n && static_cast<long>(universal.size()) < k; ++v)
            if (g.degree(v) == n - 1) universal.push_back(v);
        if (static_cast<long>(universal.size()) == k && n >= k) {
            VertexSet rest_set(n);
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (std::find(universal.begin(), universal.end(), v) == universal.end()) {
                    rest_set.add(v);
                    rest.push_back(v);
                }
            Graph f = induced_subgraph(g, rest_set);
            return join_verdict(f, p, universal, rest, n);
        }
    }
    return check_property_exhaustive(g, p, cap);
}

bool eta_monotone_check(const Graph& f, const Graph& fsub, const std::vector<int>& embedding,
                        const Params& p) {
    if (static_cast<int>(embedding.size()) != fsub.order())
        throw ValidationError("embedding size does not match subgraph order");
    std::vector<bool> hit(f.order(), false);
    for (int img : embedding) {
        if (img < 0 || img >= f.order()) throw ValidationError("embedding image out of range");
        if (hit[img]) throw ValidationError("embedding not injective");
        hit[img] = true;
    }
    for (auto [u, v] : fsub.edges())
        if (!f.has_edge(embedding[u], embedding[v]))
            throw ValidationError("embedding does not preserve an edge");
    return !(eta(fsub, p) > eta(f, p));
}

double rho_bound_integer_t(long n, const Params& p) {
    if (!p.t.is_integer()) throw ValidationError("integer-t bound needs integral t");
    double t = p.t.to_double(), r = p.r.to_double();
    return (t - 1.0) / 2.0 + std::sqrt(t * (t + 1.0) + 2.0 * r) + std::sqrt(t * n);
}

double rho_bound_quadratic(long n, const Params& p) {
    DerivedConstants dc = derive_constants(p);
    long s = dc.s, ft = dc.floor_t;
    // discriminant decided exactly: (s+ft-2)^2 + 4*(ft*n - ft^2 - (s-1)(ft-1)) over 4
    long long inner = (s + ft - 2) * (s + ft - 2) + 4 * (ft * n - ft * ft - (s - 1) * (ft - 1));
    if (inner < 0) throw ValidationError("quadratic bound undefined for this n (negative discriminant)");
    return (static_cast<double>(s + ft - 2) + std::sqrt(static_cast<double>(inner))) / 2.0;
}

}  // namespace hbp
