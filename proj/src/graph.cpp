#include "hbp/graph.hpp"

#include <algorithm>
#include <queue>

namespace hbp {

VertexSet::VertexSet(int universe) : universe_(universe), count_(0) {
    if (universe < 0) throw ValidationError("negative universe");
    words_.assign((universe + 63) / 64, 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) add(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) add(v);
}

void VertexSet::add(int v) {
    if (v < 0 || v >= universe_) throw ValidationError("vertex out of range");
    std::uint64_t& w = words_[v / 64];
    std::uint64_t bit = 1ULL << (v % 64);
    if (!(w & bit)) {
        w |= bit;
        ++count_;
    }
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[v / 64] >> (v % 64)) & 1;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < universe_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
    if (order < 0) throw ValidationError("negative order");
    for (auto& [u, v] : edges) {
        if (u == v) throw ValidationError("self-loop");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order) throw ValidationError("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(order, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    if (dense()) {
        bits_.assign(order, 0);
        for (auto [u, v] : edges_) {
            bits_[u] |= 1ULL << v;
            bits_[v] |= 1ULL << u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (dense()) return (bits_[u] >> v) & 1;
    const auto& nb = adj_[degree(u) <= degree(v) ? u : v];
    int other = degree(u) <= degree(v) ? v : u;
    return std::find(nb.begin(), nb.end(), other) != nb.end();
}

Graph complete(int k) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < k; ++v)
        for (int u = 0; u < v; ++u) e.emplace_back(u, v);
    return Graph(k, std::move(e));
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph(leaves + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> e = g1.edges();
    int off = g1.order();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + off, v + off);
    return Graph(g1.order() + g2.order(), std::move(e));
}

Graph join(const Graph& g1, const Graph& g2) {
    std::vector<std::pair<int, int>> e = g1.edges();
    int off = g1.order();
    for (auto [u, v] : g2.edges()) e.emplace_back(u + off, v + off);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) e.emplace_back(u, off + v);
    return Graph(g1.order() + g2.order(), std::move(e));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw ValidationError("vertex set universe mismatch");
    std::vector<int> keep = s.members();
    std::vector<int> index(g.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) e.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(keep.size()), std::move(e));
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        VertexSet comp(g.order());
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.add(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace hbp
