#include "hbp/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace hbp {

void MaxFlow::add_edge(int from, int to, std::int64_t cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
}

bool MaxFlow::bfs(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e = head_[v]; e != -1; e = edges_[e].next) {
            if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                level_[edges_[e].to] = level_[v] + 1;
                q.push(edges_[e].to);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int sink, std::int64_t pushed) {
    if (v == sink) return pushed;
    for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
        Edge& ed = edges_[e];
        if (ed.cap > 0 && level_[ed.to] == level_[v] + 1) {
            std::int64_t got = dfs(ed.to, sink, std::min(pushed, ed.cap));
            if (got > 0) {
                ed.cap -= got;
                edges_[e ^ 1].cap += got;
                return got;
            }
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
    std::int64_t flow = 0;
    while (bfs(source, sink)) {
        iter_ = head_;
        while (std::int64_t f = dfs(source, sink, kInf)) flow += f;
    }
    return flow;
}

}  // namespace hbp
