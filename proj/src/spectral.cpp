#include "hbp/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hbp {

std::string uint128_to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

// Iteration on one connected piece; the Perron gap there is genuine, so the
// shifted step converges geometrically.
PerronResult power_iterate(const Graph& g, double tol, long max_iter) {
    int n = g.order();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    PerronResult res;
    for (long iter = 1; iter <= max_iter; ++iter) {
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int w : g.neighbors(v)) s += x[w];
            ax[v] = s;
        }
        double rho = 0.0;
        for (int v = 0; v < n; ++v) rho += x[v] * ax[v];
        double resid = 0.0;
        for (int v = 0; v < n; ++v) resid = std::max(resid, std::fabs(ax[v] - rho * x[v]));
        res.rho = rho;
        res.iterations = iter;
        res.residual = resid;
        if (resid <= tol) {
            res.vector = x;
            return res;
        }
        double norm = 0.0;
        for (int v = 0; v < n; ++v) {
            ax[v] += x[v];  // shifted step, keeps a gap on bipartite graphs
            norm += ax[v] * ax[v];
        }
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = ax[v] / norm;
    }
    res.vector = x;
    throw ConvergenceError("power iteration did not reach tolerance in " +
                               std::to_string(max_iter) + " iterations",
                           res);
}

}  // namespace

PerronResult spectral_radius(const Graph& g, double tol, long max_iter) {
    int n = g.order();
    if (n == 0) throw ValidationError("spectral radius needs at least one vertex");
    if (tol <= 0) throw ValidationError("tolerance must be positive");
    std::vector<VertexSet> comps = components(g);
    if (comps.size() == 1) return power_iterate(g, tol, max_iter);
    // Disconnected: the dominant component decides; its vector is embedded
    // into the full coordinate space and the rest stays zero.
    PerronResult best;
    best.rho = -1.0;
    const VertexSet* best_comp = nullptr;
    long total_iters = 0;
    for (const VertexSet& comp : comps) {
        PerronResult part = power_iterate(induced_subgraph(g, comp), tol, max_iter);
        total_iters += part.iterations;
        if (part.rho > best.rho) {
            best = part;
            best_comp = &comp;
        }
    }
    std::vector<double> x(n, 0.0);
    std::vector<int> vs = best_comp->members();
    for (size_t i = 0; i < vs.size(); ++i) x[vs[i]] = best.vector[i];
    best.vector = std::move(x);
    best.iterations = total_iters;
    return best;
}

namespace {

uint128 checked_add(uint128 a, uint128 b, int level) {
    uint128 out;
    if (__builtin_add_overflow(a, b, &out))
        throw WideOverflowError("walk count overflow at level " + std::to_string(level), level);
    return out;
}

// One multiplication by the adjacency matrix, overflow-checked.
std::vector<uint128> step(const Graph& g, const std::vector<uint128>& w, int level) {
    std::vector<uint128> out(w.size(), 0);
    for (int v = 0; v < g.order(); ++v) {
        uint128 s = 0;
        for (int u : g.neighbors(v)) s = checked_add(s, w[u], level);
        out[v] = s;
    }
    return out;
}

uint128 total(const std::vector<uint128>& w, int level) {
    uint128 s = 0;
    for (uint128 x : w) s = checked_add(s, x, level);
    return s;
}

}  // namespace

std::vector<uint128> walk_counts(const Graph& g, int lmax) {
    if (lmax < 1) throw ValidationError("lmax must be at least 1");
    std::vector<uint128> w(g.order(), 1);
    std::vector<uint128> out;
    out.reserve(static_cast<size_t>(lmax));
    for (int level = 1; level <= lmax; ++level) {
        w = step(g, w, level);
        out.push_back(total(w, level));
    }
    return out;
}

WalkComparison walk_compare(const Graph& h1, const Graph& h2) {
    int lmax = h1.order() + h2.order();
    std::vector<uint128> w1(h1.order(), 1), w2(h2.order(), 1);
    for (int level = 1; level <= lmax; ++level) {
        w1 = step(h1, w1, level);
        w2 = step(h2, w2, level);
        uint128 a = total(w1, level), b = total(w2, level);
        if (a != b)
            return {a > b ? WalkOrder::FirstPreferable : WalkOrder::SecondPreferable, level};
    }
    return {WalkOrder::Equivalent, 0};
}

uint128 degree_power_sum(const Graph& g, int p) {
    if (p < 1) throw ValidationError("p must be at least 1");
    uint128 sum = 0;
    for (int v = 0; v < g.order(); ++v) {
        uint128 pw = 1;
        for (int k = 0; k < p; ++k) {
            uint128 out;
            if (__builtin_mul_overflow(pw, static_cast<uint128>(g.degree(v)), &out))
                throw WideOverflowError("degree power overflow at p=" + std::to_string(p), p);
            pw = out;
        }
        sum = checked_add(sum, pw, p);
    }
    return sum;
}

VertexSet heavy_vertex_set(const Graph& g, const Params& p, double tol) {
    if (components(g).size() != 1) throw ValidationError("heavy_vertex_set needs a connected graph");
    DerivedConstants dc = derive_constants(p);
    PerronResult pr = spectral_radius(g, tol);
    double xmax = *std::max_element(pr.vector.begin(), pr.vector.end());
    double s = static_cast<double>(dc.s);
    double threshold = (1.0 - 1.0 / (50.0 * s * s)) * xmax;
    VertexSet out(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (pr.vector[v] >= threshold) out.add(v);
    return out;
}

}  // namespace hbp
