#include "hbp/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "hbp/spectral.hpp"

namespace hbp {

ExtremalPlan plan_extremal(long n, const Params& p) {
    DerivedConstants dc = derive_constants(p);
    Rational three_t0 = Rational(3) * dc.t0;
    Rational star_cut = Rational(8) * dc.t0 - Rational(4);
    if (!(dc.g0 < three_t0) && dc.g0 < star_cut) {
        if (n - dc.floor_t - 3 < 0)
            throw ValidationError("n too small for the triangle construction");
        return {ExtremalBranch::Triangle, StarProfile{}, n, p, dc};
    }
    StarProfile sp;
    long rem = n - dc.floor_t - dc.alpha0;
    if (rem < 1) throw ValidationError("n too small for the star-forest construction");
    sp.gamma0 = (rem - 1) % dc.m0 + 1;
    sp.n0 = (rem - sp.gamma0) / dc.m0;
    sp.gamma = sp.gamma0;
    if (dc.alpha0 == 0) {
        // g0 < phi0: no star may go positive, so the forest is all small
        // stars plus the leftover minimal one.
        sp.a = sp.b = 0;
        sp.maximal_present = false;
        sp.small_count = sp.gamma0 == dc.m0 ? sp.n0 + 1 : sp.n0;
        return {ExtremalBranch::StarForest, sp, n, p, dc};
    }
    auto [a, c] = f2_closed_form(dc);
    sp.a = a;
    sp.b = dc.alpha0 - sp.a - 1;
    sp.small_count = sp.gamma0 == dc.m0 ? sp.n0 - sp.b : sp.n0 - sp.b - 1;
    if (sp.small_count < 0) throw ValidationError("n too small for the star-forest construction");
    return {ExtremalBranch::StarForest, sp, n, p, dc};
}

Graph build_forest(const ExtremalPlan& plan) {
    const DerivedConstants& dc = plan.constants;
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    auto add_star = [&](long leaves) {
        for (long l = 1; l <= leaves; ++l) edges.emplace_back(base, base + static_cast<int>(l));
        base += static_cast<int>(leaves) + 1;
    };
    if (plan.branch == ExtremalBranch::Triangle) {
        edges = {{0, 1}, {0, 2}, {1, 2}};
        base = 3 + static_cast<int>(plan.n - dc.floor_t - 3);
        return Graph(base, std::move(edges));
    }
    const StarProfile& sp = plan.profile;
    if (sp.maximal_present) add_star(dc.m0 + sp.a);
    for (long k = 0; k < sp.b; ++k) add_star(dc.m0);
    for (long k = 0; k < sp.small_count; ++k) add_star(dc.m0 - 1);
    if (sp.gamma < dc.m0) add_star(sp.gamma - 1);
    return Graph(base, std::move(edges));
}

Graph build_extremal(const ExtremalPlan& plan) {
    Graph g = join(complete(static_cast<int>(plan.constants.floor_t)), build_forest(plan));
    if (g.order() != plan.n) throw ValidationError("plan does not account for every vertex");
    return g;
}

long f2_score(long a, long c, const DerivedConstants& dc, long gamma0) {
    return 2 * a * a + 2 * a + 2 * c * c - 2 * c * (2 * (dc.m0 - gamma0) + 1);
}

std::pair<long, long> f2_closed_form(const DerivedConstants& dc) {
    if (dc.alpha0 == 0) return {0, 0};
    if (dc.t0 == dc.phi0) return {dc.alpha0 - 1, 0};
    long cap = (dc.beta0 / (dc.t0 - dc.phi0)).floor();
    return {std::min(cap, dc.alpha0 - 1), 0};
}

namespace {

struct StarShape {
    int center;
    std::vector<int> leaves;
};

StarShape star_shape(const Graph& f, const VertexSet& comp) {
    std::vector<int> vs = comp.members();
    Graph sub = induced_subgraph(f, comp);
    if (sub.edge_count() != sub.order() - 1)
        throw ValidationError("component is not a star");
    int center_local = 0;
    for (int v = 0; v < sub.order(); ++v)
        if (sub.degree(v) == sub.order() - 1) {
            center_local = v;
            break;
        }
    StarShape shape{vs[center_local], {}};
    for (int v = 0; v < sub.order(); ++v) {
        if (v == center_local) continue;
        if (sub.degree(v) != 1) throw ValidationError("component is not a star");
        shape.leaves.push_back(vs[v]);
    }
    return shape;
}

}  // namespace

Graph star_shift(const Graph& f, int donor, int receiver) {
    std::vector<VertexSet> comps = components(f);
    int k = static_cast<int>(comps.size());
    if (donor < 0 || donor >= k || receiver < 0 || receiver >= k || donor == receiver)
        throw ValidationError("bad component indices");
    StarShape d = star_shape(f, comps[donor]);
    StarShape r = star_shape(f, comps[receiver]);
    if (d.leaves.empty()) throw ValidationError("donor star has no edge to give");
    int moved = *std::min_element(d.leaves.begin(), d.leaves.end());
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : f.edges()) {
        bool is_moved = (u == std::min(d.center, moved) && v == std::max(d.center, moved));
        if (!is_moved) edges.emplace_back(u, v);
    }
    edges.emplace_back(std::min(r.center, moved), std::max(r.center, moved));
    return Graph(f.order(), std::move(edges));
}

VerificationReport verify_plan(const ExtremalPlan& plan) {
    VerificationReport rep;
    Graph forest = build_forest(plan);
    Graph g = build_extremal(plan);
    rep.join_property_pass = check_join_property(forest, plan.params).holds;
    if (plan.branch == ExtremalBranch::StarForest) {
        rep.edge_identity_applicable = true;
        rep.forest_edges = forest.edge_count();
        rep.expected_forest_edges = plan.n - plan.constants.floor_t - (plan.profile.n0 + 1);
        rep.edge_identity_pass = rep.forest_edges == rep.expected_forest_edges;
    }
    rep.rho = spectral_radius(g).rho;
    double ft = static_cast<double>(plan.constants.floor_t);
    rep.rho_lower_bound = std::sqrt(ft * (static_cast<double>(plan.n) - ft));
    rep.rho_lower_bound_pass = rep.rho >= rep.rho_lower_bound - 1e-9;
    return rep;
}

}  // namespace hbp
