#pragma once

// Brute-force references, deliberately naive and independent of the library
// search code. Only usable on very small graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace testsupport {

using namespace treeconn;

// Every arc subset that is an (S,r)-tree (minimal or not). Needs |A| <= 20.
inline std::vector<std::uint32_t> all_steiner_trees(const SteinerInstance& inst) {
  const Digraph& d = inst.graph();
  std::vector<std::uint32_t> result;
  const std::uint32_t limit = std::uint32_t{1} << d.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    OutTree t{inst.root(), {}};
    for (ArcId id = 0; id < static_cast<ArcId>(d.size()); ++id) {
      if ((mask >> id) & 1U) t.arcs.push_back(id);
    }
    if (!steiner_tree_violation(inst, t)) result.push_back(mask);
  }
  return result;
}

inline std::uint64_t inner_vertices(const SteinerInstance& inst, std::uint32_t mask) {
  std::uint64_t vs = 0;
  const Digraph& d = inst.graph();
  for (ArcId id = 0; id < static_cast<ArcId>(d.size()); ++id) {
    if (!((mask >> id) & 1U)) continue;
    for (Vertex v : {d.arc(id).tail, d.arc(id).head}) {
      if (!inst.is_terminal(v)) vs |= std::uint64_t{1} << v;
    }
  }
  return vs;
}

// Largest family of pairwise compatible trees, by plain recursion.
inline int naive_packing(const SteinerInstance& inst, Disjointness mode) {
  const auto trees = all_steiner_trees(inst);
  std::vector<std::uint64_t> inner;
  for (auto t : trees) inner.push_back(inner_vertices(inst, t));
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, std::uint64_t, int)> go =
      [&](std::size_t from, std::uint32_t used_arcs, std::uint64_t used_inner, int count) {
        best = std::max(best, count);
        for (std::size_t i = from; i < trees.size(); ++i) {
          if (trees[i] & used_arcs) continue;
          if (mode == Disjointness::kInternal && (inner[i] & used_inner)) continue;
          go(i + 1, used_arcs | trees[i], used_inner | inner[i], count + 1);
        }
      };
  go(0, 0, 0, 0);
  return best;
}

// Smallest number of arcs whose removal leaves no (x,y)-path. Needs |A| <= 20.
inline int min_arc_cut(const Digraph& d, Vertex x, Vertex y) {
  const std::uint32_t limit = std::uint32_t{1} << d.size();
  int best = static_cast<int>(d.size());
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int removed = __builtin_popcount(mask);
    if (removed >= best) continue;
    std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
    std::vector<Vertex> stack{x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (ArcId id : d.out_arcs(v)) {
        if ((mask >> id) & 1U) continue;
        const Vertex w = d.arc(id).head;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    if (!seen[static_cast<std::size_t>(y)]) best = removed;
  }
  return best;
}

// Smallest vertex set (avoiding x, y) whose removal leaves no (x,y)-path,
// after deleting the arc xy; plus one if that arc exists.
inline int min_vertex_cut(const Digraph& d, Vertex x, Vertex y) {
  const int n = d.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (((mask >> x) & 1U) || ((mask >> y) & 1U)) continue;
    const int removed = __builtin_popcount(mask);
    if (removed >= best) continue;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{x};
    seen[static_cast<std::size_t>(x)] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (ArcId id : d.out_arcs(v)) {
        const Vertex w = d.arc(id).head;
        if (v == x && w == y) continue;
        if (((mask >> w) & 1U) || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
    if (!seen[static_cast<std::size_t>(y)]) best = removed;
  }
  return best + (d.has_arc(x, y) ? 1 : 0);
}

}  // namespace testsupport
