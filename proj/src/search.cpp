#include <algorithm>
#include <bit>
#include <map>
#include <thread>

#include "hbp/extremal.hpp"
#include "hbp/graph6.hpp"
#include "hbp/spectral.hpp"

namespace hbp {

namespace {

constexpr double kRhoWindow = 1e-9;

// Bit position of edge (u,v), u < v, in graph6 column-major order.
int pair_bit(int u, int v) { return v * (v - 1) / 2 + u; }

Graph graph_from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(std::popcount(mask)));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_bit(u, v)) & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

struct SubsetRule {
    std::uint32_t edge_mask;
    long threshold;
};

// Only subset sizes whose bound actually bites are kept.
std::vector<SubsetRule> subset_rules(int n, const Params& p) {
    std::vector<SubsetRule> rules;
    long min_size = std::max<long>(1, p.t.ceil());
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size < min_size) continue;
        long thr = (p.t * Rational(size) + p.r).floor();
        if (thr >= static_cast<long>(size) * (size - 1) / 2) continue;
        std::uint32_t em = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (((s >> u) & 1) && ((s >> v) & 1)) em |= 1u << pair_bit(u, v);
        rules.push_back({em, thr});
    }
    return rules;
}

struct WorkerResult {
    long satisfying = 0;
    double local_max = -1.0;
    std::vector<std::pair<std::uint32_t, double>> candidates;
};

void scan_range(int n, const std::vector<SubsetRule>& rules, std::uint32_t lo, std::uint64_t hi,
                WorkerResult& out) {
    for (std::uint64_t m = lo; m < hi; ++m) {
        std::uint32_t mask = static_cast<std::uint32_t>(m);
        bool ok = true;
        for (const SubsetRule& rule : rules)
            if (std::popcount(mask & rule.edge_mask) > rule.threshold) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++out.satisfying;
        double rho = spectral_radius(graph_from_mask(n, mask)).rho;
        if (rho < out.local_max - kRhoWindow) continue;
        out.candidates.emplace_back(mask, rho);
        if (rho > out.local_max) out.local_max = rho;
        if (out.candidates.size() > 4096) {
            std::erase_if(out.candidates,
                          [&](const auto& c) { return c.second < out.local_max - kRhoWindow; });
        }
    }
}

}  // namespace

SearchReport exhaustive_search(long n, const Params& p, int jobs) {
    if (n < 1) throw ValidationError("search needs n >= 1");
    if (n > 8) throw LimitError("exhaustive search capped at n = 8");
    if (jobs < 1) throw ValidationError("jobs must be positive");
    int ni = static_cast<int>(n);
    std::vector<SubsetRule> rules = subset_rules(ni, p);
    std::uint64_t space = 1ULL << (ni * (ni - 1) / 2);

    std::vector<WorkerResult> results(static_cast<size_t>(jobs));
    std::vector<std::thread> threads;
    std::uint64_t chunk = (space + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t lo = chunk * j, hi = std::min(space, chunk * (j + 1));
        if (lo >= hi) continue;
        threads.emplace_back([&, j, lo, hi] {
            scan_range(ni, rules, static_cast<std::uint32_t>(lo), hi, results[static_cast<size_t>(j)]);
        });
    }
    for (auto& th : threads) th.join();

    SearchReport rep;
    rep.n = n;
    rep.t = p.t;
    rep.r = p.r;
    double max_rho = -1.0;
    for (const WorkerResult& w : results) {
        rep.satisfying_count += w.satisfying;
        max_rho = std::max(max_rho, w.local_max);
    }
    rep.max_rho = max_rho;

    // Canonical class -> smallest labeled representative; the merge is order
    // independent, so the report does not depend on the partitioning.
    std::map<std::string, std::uint32_t> classes;
    for (const WorkerResult& w : results)
        for (auto [mask, rho] : w.candidates) {
            if (rho < max_rho - kRhoWindow) continue;
            std::string canon = canonical_form(graph_from_mask(ni, mask));
            auto [it, fresh] = classes.try_emplace(canon, mask);
            if (!fresh) it->second = std::min(it->second, mask);
        }
    for (const auto& [canon, mask] : classes) rep.maximizers.push_back(canon);

    try {
        Graph built = build_extremal(plan_extremal(n, p));
        std::string canon = canonical_form(built);
        rep.construction = canon;
        rep.construction_agrees = classes.count(canon) > 0;
    } catch (const ValidationError&) {
        // n too small for the construction; nothing to compare against.
    }
    return rep;
}

}  // namespace hbp
