#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hbp/errors.hpp"

namespace hbp {

// Subset of the vertex range of some graph. Backed by a bitset, so
// membership and cardinality are O(1)-ish for the orders we enumerate.
class VertexSet {
  public:
    VertexSet() : universe_(0), count_(0) {}
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    void add(int v);
    bool contains(int v) const;
    int count() const { return count_; }
    int universe() const { return universe_; }
    std::vector<int> members() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

  private:
    int universe_;
    int count_;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..order-1, immutable once built.
// Orders up to 62 additionally carry one adjacency word per vertex, the
// representation the subset enumeration and the graph6 codec run on.
class Graph {
  public:
    Graph() : order_(0) {}
    Graph(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    bool dense() const { return order_ <= 62; }
    std::uint64_t adjacency_bits(int v) const { return bits_[v]; }  // dense() only

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

  private:
    int order_;
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

Graph complete(int k);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
std::vector<VertexSet> components(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);

// Isomorphism-invariant encoding for graphs of order <= 10: the graph6
// string of the lexicographically smallest adjacency bit string over all
// vertex relabelings compatible with the degree partition.
std::string canonical_form(const Graph& g);
bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace hbp
