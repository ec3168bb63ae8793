#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "treeconn/packing_exact.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn::detail {

using ArcSet = std::bitset<kHardMaxArcs>;
using VertexSet = std::uint64_t;

inline constexpr int kMaxSetVertices = 64;
inline VertexSet vertex_bit(Vertex v) { return VertexSet{1} << static_cast<unsigned>(v); }

// Enumerates (S,r)-trees whose leaves all lie in S, restricted to allowed arcs
// and to vertices outside blocked. Sinks are attached in ascending order, each
// by the unique path from the current tree, so every tree is produced once.
//
// emit(const std::vector<ArcId>& arcs, VertexSet vertices) returns false to stop.
template <class Emit>
class MinimalTreeEnumerator {
 public:
  MinimalTreeEnumerator(const SteinerInstance& inst, const ArcSet& allowed, VertexSet blocked,
                        Emit& emit)
      : inst_(inst), graph_(inst.graph()), allowed_(allowed), blocked_(blocked), emit_(emit),
        sinks_(inst.sinks()) {}

  // Returns false if emit asked to stop.
  bool run() {
    reach_ = reachable_from_root();
    for (Vertex s : sinks_) {
      if ((reach_ & vertex_bit(s)) == 0) return true;
    }
    in_tree_ = vertex_bit(inst_.root());
    return attach(0);
  }

 private:
  VertexSet reachable_from_root() const {
    VertexSet seen = vertex_bit(inst_.root());
    std::vector<Vertex> stack{inst_.root()};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (ArcId id : graph_.out_arcs(v)) {
        if (!allowed_[static_cast<std::size_t>(id)]) continue;
        const Vertex w = graph_.arc(id).head;
        if ((seen | blocked_) & vertex_bit(w)) continue;
        seen |= vertex_bit(w);
        stack.push_back(w);
      }
    }
    return seen;
  }

  bool attach(std::size_t i) {
    while (i < sinks_.size() && (in_tree_ & vertex_bit(sinks_[i])) != 0) ++i;
    if (i == sinks_.size()) return emit_(static_cast<const std::vector<ArcId>&>(arcs_), in_tree_);
    const Vertex t = sinks_[i];
    auto& path_arcs = level_paths_[i];
    path_arcs.clear();
    return walk_back(t, i, vertex_bit(t), path_arcs);
  }

  // Extends a backward path ending at sink i until it meets the current tree.
  bool walk_back(Vertex v, std::size_t i, VertexSet path_vertices, std::vector<ArcId>& path_arcs) {
    for (ArcId id : graph_.in_arcs(v)) {
      if (!allowed_[static_cast<std::size_t>(id)]) continue;
      const Vertex u = graph_.arc(id).tail;
      const VertexSet ub = vertex_bit(u);
      if ((reach_ & ub) == 0 || (path_vertices & ub) != 0) continue;
      if ((in_tree_ & ub) != 0) {
        const std::size_t arcs_before = arcs_.size();
        const VertexSet tree_before = in_tree_;
        arcs_.insert(arcs_.end(), path_arcs.begin(), path_arcs.end());
        arcs_.push_back(id);
        in_tree_ |= path_vertices;
        const bool go_on = attach(i + 1);
        arcs_.resize(arcs_before);
        in_tree_ = tree_before;
        if (!go_on) return false;
        continue;
      }
      path_arcs.push_back(id);
      const bool go_on = walk_back(u, i, path_vertices | ub, path_arcs);
      path_arcs.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const SteinerInstance& inst_;
  const Digraph& graph_;
  const ArcSet& allowed_;
  VertexSet blocked_;
  Emit& emit_;
  std::vector<Vertex> sinks_;
  std::vector<std::vector<ArcId>> level_paths_ = std::vector<std::vector<ArcId>>(sinks_.size());
  VertexSet reach_ = 0;
  VertexSet in_tree_ = 0;
  std::vector<ArcId> arcs_;
};

template <class Emit>
bool for_each_minimal_tree(const SteinerInstance& inst, const ArcSet& allowed, VertexSet blocked,
                           Emit&& emit) {
  MinimalTreeEnumerator<std::remove_reference_t<Emit>> walker(inst, allowed, blocked, emit);
  return walker.run();
}

inline ArcSet all_arcs(const Digraph& d) {
  ArcSet s;
  for (std::size_t i = 0; i < d.size(); ++i) s.set(i);
  return s;
}

// Value-only local arc connectivity (no path decomposition).
int lambda_value(const Digraph& d, Vertex x, Vertex y);

}  // namespace treeconn::detail
