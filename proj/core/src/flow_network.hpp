#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace treeconn::detail {

// Residual network for small integer-capacity max-flow (Dinic).
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  struct Edge {
    int to;
    int cap;
    int tag;  // caller-defined label; -1 on reverse edges
  };

  explicit FlowNetwork(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add_edge(int from, int to, int cap, int tag) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, cap, tag});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    edges_.push_back({from, 0, -1});
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    original_cap_.push_back(cap);
    original_cap_.push_back(0);
    return id;
  }

  int max_flow(int source, int sink, int limit = kInfinite) {
    int total = 0;
    while (total < limit && bfs(source, sink)) {
      iter_.assign(adj_.size(), 0);
      while (total < limit) {
        const int pushed = dfs(source, sink, limit - total);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  int flow_on(int edge_id) const {
    return original_cap_[static_cast<std::size_t>(edge_id)] - edges_[static_cast<std::size_t>(edge_id)].cap;
  }
  const std::vector<int>& out(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  int node_count() const { return static_cast<int>(adj_.size()); }

 private:
  bool bfs(int source, int sink) {
    level_.assign(adj_.size(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int id : adj_[static_cast<std::size_t>(v)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  int dfs(int v, int sink, int pushed) {
    if (v == sink) return pushed;
    auto& it = iter_[static_cast<std::size_t>(v)];
    const auto& out = adj_[static_cast<std::size_t>(v)];
    for (; it < static_cast<int>(out.size()); ++it) {
      const int id = out[static_cast<std::size_t>(it)];
      Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      const int got = dfs(e.to, sink, std::min(pushed, e.cap));
      if (got > 0) {
        e.cap -= got;
        edges_[static_cast<std::size_t>(id ^ 1)].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> original_cap_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace treeconn::detail
