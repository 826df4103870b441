#pragma once

#include <cstdint>
#include <vector>

namespace hbp {

// Dinic's algorithm with integer capacities; just enough for the
// project-selection networks built by the density certifier.
class MaxFlow {
  public:
    static constexpr std::int64_t kInf = INT64_MAX / 4;

    explicit MaxFlow(int nodes) : head_(nodes, -1) {}

    void add_edge(int from, int to, std::int64_t cap);
    std::int64_t run(int source, int sink);

  private:
    struct Edge {
        int to;
        int next;
        std::int64_t cap;
    };
    bool bfs(int source, int sink);
    std::int64_t dfs(int v, int sink, std::int64_t pushed);

    std::vector<Edge> edges_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace hbp
