#pragma once

#include <string>
#include <vector>

#include "hbp/constants.hpp"
#include "hbp/graph.hpp"

namespace hbp {

using uint128 = unsigned __int128;
std::string uint128_to_string(uint128 v);

struct PerronResult {
    double rho = 0.0;
    std::vector<double> vector;  // nonnegative, unit Euclidean norm
    long iterations = 0;
    double residual = 0.0;  // max-norm of A*x - rho*x at return
};

// Thrown when power iteration runs out of budget; carries the best estimate.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, PerronResult best_)
        : std::runtime_error(what), best(std::move(best_)) {}
    PerronResult best;
};

// Power iteration from the all-ones direction. Each step multiplies by
// A + I so bipartite graphs (whose extreme eigenvalues are +-rho) still
// leave a gap at the top; convergence is declared on ||A*x - rho*x||_inf
// with rho the Rayleigh quotient of the current iterate.
PerronResult spectral_radius(const Graph& g, double tol = 1e-10, long max_iter = 1000000);

// Exact walk totals W_1..W_lmax via integer matrix-vector products on the
// all-ones vector. 128-bit and overflow-checked; never wraps or rounds.
std::vector<uint128> walk_counts(const Graph& g, int lmax);

enum class WalkOrder { Equivalent, FirstPreferable, SecondPreferable };

struct WalkComparison {
    WalkOrder outcome;
    int level;  // smallest l where the walk totals differ; 0 when equivalent
};

// Compares W_l(h1) and W_l(h2) for l = 1..order(h1)+order(h2); agreement on
// that window forces agreement everywhere (the totals are exponential sums
// over at most that many eigenvalue bases).
WalkComparison walk_compare(const Graph& h1, const Graph& h2);

// F_p: sum of p-th powers of the vertex degrees, exact.
uint128 degree_power_sum(const Graph& g, int p);

// Vertices whose Perron entry is at least (1 - 1/(50 s^2)) of the largest,
// with s from derive_constants. Requires a connected graph.
VertexSet heavy_vertex_set(const Graph& g, const Params& p, double tol = 1e-10);

}  // namespace hbp
