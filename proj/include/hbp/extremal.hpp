#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbp/constants.hpp"
#include "hbp/graph.hpp"
#include "hbp/property.hpp"

namespace hbp {

// Star multiset of the extremal forest. With m0 = floor(1/t0): one head
// star K_{1,m0+a} (a big star when a = 0, absent only in the degenerate
// alpha0 = 0 case), b big stars K_{1,m0}, small_count small stars
// K_{1,m0-1}, and one minimal star K_{1,gamma-1} present iff gamma < m0.
struct StarProfile {
    long a = 0;
    long b = 0;
    long small_count = 0;
    long gamma = 0;   // in [1, m0]; no separate minimal star when gamma == m0
    long n0 = 0;      // n - floor(t) - alpha0 = n0*m0 + gamma0
    long gamma0 = 0;  // in [1, m0]
    bool maximal_present = true;
};

enum class ExtremalBranch { Triangle, StarForest };

struct ExtremalPlan {
    ExtremalBranch branch;
    StarProfile profile;  // StarForest branch only
    long n;
    Params params;
    DerivedConstants constants;
};

// Triangle branch iff 3*t0 <= g0 < 8*t0 - 4 (strict upper end); otherwise
// the star forest with a = min{floor(beta0/(t0-phi0)), alpha0-1}, falling
// back to a = alpha0-1 when t0 = phi0 and to an all-small forest when
// alpha0 = 0. Throws when some count would go negative (n too small).
ExtremalPlan plan_extremal(long n, const Params& p);

// The forest F alone, and the full join K_floor(t) nabla F.
Graph build_forest(const ExtremalPlan& plan);
Graph build_extremal(const ExtremalPlan& plan);

// 2*f2(a,c) = 2a^2 + 2a + 2c^2 - 2c(2(m0-gamma0)+1); doubled so the score
// stays integral. Larger is better inside the feasible region.
long f2_score(long a, long c, const DerivedConstants& dc, long gamma0);

// The plan's (a, c) choice as a standalone value, for cross-checking.
std::pair<long, long> f2_closed_form(const DerivedConstants& dc);

// Moves one leaf from the donor star component onto the receiver star's
// center; vertex set and edge count are preserved.
Graph star_shift(const Graph& f, int donor, int receiver);

struct VerificationReport {
    bool join_property_pass = false;
    bool edge_identity_pass = false;
    bool edge_identity_applicable = false;  // star-forest branch only
    bool rho_lower_bound_pass = false;
    double rho = 0.0;
    double rho_lower_bound = 0.0;
    long forest_edges = 0;
    long expected_forest_edges = 0;
    bool all_pass() const {
        return join_property_pass && rho_lower_bound_pass &&
               (!edge_identity_applicable || edge_identity_pass);
    }
};

VerificationReport verify_plan(const ExtremalPlan& plan);

struct SearchReport {
    long n = 0;
    Rational t;
    Rational r;
    long satisfying_count = 0;                // labeled graphs with the property
    double max_rho = 0.0;
    std::vector<std::string> maximizers;      // canonical graph6, sorted
    std::optional<std::string> construction;  // canonical graph6 of the plan, if buildable
    std::optional<bool> construction_agrees;
};

// Enumerates all 2^C(n,2) labeled graphs (n <= 8), keeps those with the
// property, and reports the spectral-radius maximizers within 1e-9 of the
// best, deduplicated up to isomorphism. Output is independent of jobs.
SearchReport exhaustive_search(long n, const Params& p, int jobs = 1);

}  // namespace hbp
