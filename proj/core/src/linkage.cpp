#include <algorithm>
#include <queue>
#include <string>

#include "treeconn/errors.hpp"
#include "treeconn/packing_exact.hpp"

namespace treeconn {

namespace {

// Vertex-disjoint paths between distinct terminal pairs of an undirected graph,
// by backtracking over simple paths with a reachability check between pairs.
class DisjointPathSearch {
 public:
  DisjointPathSearch(std::vector<std::vector<int>> adj, std::vector<std::pair<int, int>> pairs)
      : adj_(std::move(adj)), pairs_(std::move(pairs)),
        owner_(adj_.size(), -1), used_(adj_.size(), false), paths_(pairs_.size()) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      owner_[static_cast<std::size_t>(pairs_[i].first)] = static_cast<int>(i);
      owner_[static_cast<std::size_t>(pairs_[i].second)] = static_cast<int>(i);
      used_[static_cast<std::size_t>(pairs_[i].first)] = true;
      used_[static_cast<std::size_t>(pairs_[i].second)] = true;
    }
  }

  std::optional<std::vector<std::vector<int>>> solve() {
    if (route(0)) return paths_;
    return std::nullopt;
  }

 private:
  bool enterable(int v, std::size_t pair) const {
    if (!used_[static_cast<std::size_t>(v)]) return true;
    return v == pairs_[pair].second;
  }

  // Shortest path for pair i through unused vertices, or empty.
  std::vector<int> shortest(std::size_t i) const {
    const auto [s, t] = pairs_[i];
    std::vector<int> parent(adj_.size(), -2);
    std::queue<int> queue;
    parent[static_cast<std::size_t>(s)] = -1;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      if (v == t) break;
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (parent[static_cast<std::size_t>(w)] != -2 || !enterable(w, i)) continue;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push(w);
      }
    }
    if (parent[static_cast<std::size_t>(t)] == -2) return {};
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }

  bool all_remaining_connected(std::size_t from) const {
    for (std::size_t j = from; j < pairs_.size(); ++j) {
      if (shortest(j).empty()) return false;
    }
    return true;
  }

  bool route(std::size_t i) {
    if (i == pairs_.size()) return true;
    if (!all_remaining_connected(i)) return false;
    if (i + 1 == pairs_.size()) {
      paths_[i] = shortest(i);
      return true;
    }
    paths_[i] = {pairs_[i].first};
    return extend(i);
  }

  bool extend(std::size_t i) {
    const int v = paths_[i].back();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (w == pairs_[i].second) {
        paths_[i].push_back(w);
        if (route(i + 1)) return true;
        paths_[i].pop_back();
        continue;
      }
      if (used_[static_cast<std::size_t>(w)]) continue;
      used_[static_cast<std::size_t>(w)] = true;
      paths_[i].push_back(w);
      if (extend(i)) return true;
      paths_[i].pop_back();
      used_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> owner_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> paths_;
};

}  // namespace

std::optional<std::vector<std::vector<Vertex>>> disjoint_paths_undirected(
    const Digraph& d, std::span<const std::pair<Vertex, Vertex>> pairs,
    std::span<const Vertex> avoid) {
  if (!is_symmetric(d)) throw InputError("disjoint_paths_undirected requires a symmetric digraph");
  const int n = d.order();
  for (const auto& [s, t] : pairs) {
    if (!d.contains(s) || !d.contains(t)) throw InputError("path endpoint out of range");
    if (s == t) throw InputError("path endpoints must differ");
  }
  if (pairs.empty()) return std::vector<std::vector<Vertex>>{};

  // Every occurrence of a vertex in the endpoint sequence gets its own copy,
  // adjacent to all neighbours of the original; avoided vertices that are not
  // endpoints are deleted.
  std::vector<bool> avoided(static_cast<std::size_t>(n), false);
  for (Vertex v : avoid) {
    if (d.contains(v)) avoided[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::vector<int>> copies(static_cast<std::size_t>(n));
  std::vector<Vertex> original;
  std::vector<std::pair<int, int>> copy_pairs;
  auto new_copy = [&](Vertex v) {
    const int id = static_cast<int>(original.size());
    original.push_back(v);
    copies[static_cast<std::size_t>(v)].push_back(id);
    return id;
  };
  for (const auto& [s, t] : pairs) {
    const int cs = new_copy(s);
    const int ct = new_copy(t);
    copy_pairs.emplace_back(cs, ct);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (copies[static_cast<std::size_t>(v)].empty() && !avoided[static_cast<std::size_t>(v)]) new_copy(v);
  }
  std::vector<std::vector<int>> adj(original.size());
  for (const Arc& a : d.arcs()) {
    for (int cu : copies[static_cast<std::size_t>(a.tail)]) {
      for (int cv : copies[static_cast<std::size_t>(a.head)]) adj[static_cast<std::size_t>(cu)].push_back(cv);
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  DisjointPathSearch search(std::move(adj), std::move(copy_pairs));
  auto found = search.solve();
  if (!found) return std::nullopt;
  std::vector<std::vector<Vertex>> result;
  for (const auto& path : *found) {
    std::vector<Vertex> mapped;
    mapped.reserve(path.size());
    for (int c : path) mapped.push_back(original[static_cast<std::size_t>(c)]);
    result.push_back(std::move(mapped));
  }
  return result;
}

namespace {

std::vector<Vertex> directed_bfs_path(const Digraph& d, Vertex s, Vertex t, const std::vector<bool>& blocked) {
  std::vector<Vertex> parent(static_cast<std::size_t>(d.order()), -2);
  std::queue<Vertex> queue;
  parent[static_cast<std::size_t>(s)] = -1;
  queue.push(s);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    if (v == t) break;
    for (ArcId id : d.out_arcs(v)) {
      const Vertex w = d.arc(id).head;
      if (parent[static_cast<std::size_t>(w)] != -2 || blocked[static_cast<std::size_t>(w)]) continue;
      parent[static_cast<std::size_t>(w)] = v;
      queue.push(w);
    }
  }
  if (parent[static_cast<std::size_t>(t)] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = t; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> two_linkage_directed(
    const Digraph& d, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  const std::vector<Vertex> ends{s1, t1, s2, t2};
  for (Vertex v : ends) {
    if (!d.contains(v)) throw InputError("linkage terminal out of range");
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i] == ends[j]) throw InputError("linkage terminals must be distinct");
    }
  }
  // Enumerate simple (s1,t1)-paths avoiding s2 and t2; for each, look for an
  // (s2,t2)-path in what remains.
  std::vector<bool> blocked(static_cast<std::size_t>(d.order()), false);
  blocked[static_cast<std::size_t>(s2)] = true;
  blocked[static_cast<std::size_t>(t2)] = true;
  std::vector<Vertex> first{s1};
  blocked[static_cast<std::size_t>(s1)] = true;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> answer;

  auto second_path = [&]() {
    std::vector<bool> mask = blocked;
    mask[static_cast<std::size_t>(s2)] = false;
    mask[static_cast<std::size_t>(t2)] = false;
    return directed_bfs_path(d, s2, t2, mask);
  };
  auto search = [&](auto& self, Vertex v) -> bool {
    for (ArcId id : d.out_arcs(v)) {
      const Vertex w = d.arc(id).head;
      if (w == t1) {
        first.push_back(w);
        blocked[static_cast<std::size_t>(w)] = true;
        auto other = second_path();
        blocked[static_cast<std::size_t>(w)] = false;
        if (!other.empty()) {
          answer.emplace(first, std::move(other));
          return true;
        }
        first.pop_back();
        continue;
      }
      if (blocked[static_cast<std::size_t>(w)]) continue;
      blocked[static_cast<std::size_t>(w)] = true;
      first.push_back(w);
      if (self(self, w)) return true;
      first.pop_back();
      blocked[static_cast<std::size_t>(w)] = false;
    }
    return false;
  };
  search(search, s1);
  return answer;
}

}  // namespace treeconn
