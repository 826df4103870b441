#pragma once

#include <vector>

#include "hbp/constants.hpp"
#include "hbp/graph.hpp"

namespace hbp {

// Potential of a graph under (t, r): e(F) + (floor(t) - t)|V(F)|.
Rational eta(const Graph& f, const Params& p);

// Sum of eta over the components with strictly positive potential (0 if none).
Rational eta_plus(const Graph& f, const Params& p);

enum class Certificate { FlowCut, Exhaustive, JoinEta, Vacuous };

struct PropertyVerdict {
    bool holds;
    Certificate certificate;   // meaningful when holds
    VertexSet witness;         // a violating vertex set otherwise
    long witness_edges = 0;    // e(G[witness])
    Rational bound;            // t*|witness| + r, exceeded strictly

    static PropertyVerdict ok(Certificate c) { return {true, c, VertexSet(), 0, Rational(0)}; }
    static PropertyVerdict violated(VertexSet w, long edges, Rational b) {
        return {false, Certificate::Exhaustive, std::move(w), edges, b};
    }
};

// Checks every induced subset S with |S| >= ceil(t) against e(S) <= t|S|+r,
// exactly. Induced subsets are the binding case: a subgraph on S never has
// more edges than G[S], and padding with vertices only raises the bound.
// Subsets are visited in lexicographic member order, so a Violated verdict
// carries the lexicographically first witness. Vacuous when order < t.
PropertyVerdict check_property_exhaustive(const Graph& g, const Params& p, int cap = 24);

// max over all vertex subsets S (including the empty set) of e(G[S]) - t|S|,
// exact. Reduced to min-cut on the project-selection network: source->edge
// nodes at capacity den(t), edge->endpoint at infinity, vertex->sink at
// num(t); the optimum is den(t)*e(G) minus the cut, all integral.
Rational max_density_excess(const Graph& g, const Rational& t);

// Verdict about the join of K_floor(t) with f: the join has the property
// iff eta_plus(f) <= g0. A Violated verdict names the hub plus all positive
// components, in the coordinates of join(complete(floor(t)), f).
PropertyVerdict check_join_property(const Graph& f, const Params& p);

// Composite checker: the flow certificate when r >= 0 settles it, the join
// shortcut when floor(t) universal vertices are present, the exhaustive
// scan otherwise (the only path that can hit the order cap).
PropertyVerdict check_property(const Graph& g, const Params& p, int cap = 24);

// Test hook for the subgraph monotonicity of eta. embedding maps vertices
// of fsub into f; it must be injective and edge-preserving.
bool eta_monotone_check(const Graph& f, const Graph& fsub, const std::vector<int>& embedding,
                        const Params& p);

// rho <= (t-1)/2 + sqrt(t(t+1)+2r) + sqrt(t n); integer t only.
double rho_bound_integer_t(long n, const Params& p);

// rho <= (s+ft-2)/2 + sqrt((s+ft-2)^2/4 + ft*n - ft^2 - (s-1)(ft-1)),
// the quadratic-root bound with ft = floor(t).
double rho_bound_quadratic(long n, const Params& p);

}  // namespace hbp
