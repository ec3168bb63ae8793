#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeconn/digraph.hpp"

namespace treeconn {

enum class Disjointness { kArc, kInternal };

std::string_view to_string(Disjointness mode);
/// Accepts "arc" and "vertex" (alias "internal"). Throws InputError otherwise.
Disjointness parse_disjointness(std::string_view text);

/// A digraph with a terminal set S and a root r in S, |S| >= 2.
class SteinerInstance {
 public:
  /// Throws InputError unless root is in terminals, |terminals| >= 2 and all
  /// indices are valid. Terminals are stored sorted and deduplicated.
  static SteinerInstance create(Digraph graph, std::vector<Vertex> terminals, Vertex root);

  const Digraph& graph() const { return graph_; }
  const std::vector<Vertex>& terminals() const { return terminals_; }
  Vertex root() const { return root_; }
  int k() const { return static_cast<int>(terminals_.size()); }
  bool is_terminal(Vertex v) const { return is_terminal_[static_cast<std::size_t>(v)]; }
  /// Terminals other than the root, ascending.
  std::vector<Vertex> sinks() const;

 private:
  Digraph graph_;
  std::vector<Vertex> terminals_;
  std::vector<bool> is_terminal_;
  Vertex root_ = 0;
};

/// An out-tree given by arc ids of a host digraph.
struct OutTree {
  Vertex root = 0;
  std::vector<ArcId> arcs;

  friend bool operator==(const OutTree&, const OutTree&) = default;
};

/// Reason the arc set is not an out-tree rooted at tree.root, or nullopt.
std::optional<std::string> out_tree_violation(const Digraph& host, const OutTree& tree);

/// Vertices spanned by the tree (root included), ascending.
std::vector<Vertex> tree_vertices(const Digraph& host, const OutTree& tree);

/// Reason the tree is not an (S,r)-tree of the instance, or nullopt.
std::optional<std::string> steiner_tree_violation(const SteinerInstance& inst, const OutTree& tree);

struct TreePacking {
  std::vector<OutTree> trees;
  Disjointness mode = Disjointness::kArc;
};

/// Checks every tree is an (S,r)-tree and the pairwise disjointness demanded by mode.
std::optional<std::string> packing_violation(const SteinerInstance& inst, const TreePacking& packing);

inline bool is_valid_packing(const SteinerInstance& inst, const TreePacking& packing) {
  return !packing_violation(inst, packing).has_value();
}

/// Builds an out-tree from (tail, head) pairs by looking up arcs in host.
/// Throws InputError if a pair is not an arc.
OutTree tree_from_pairs(const Digraph& host, Vertex root, const std::vector<Arc>& pairs);

std::vector<Arc> tree_pairs(const Digraph& host, const OutTree& tree);

struct RootedSet {
  std::vector<Vertex> terminals;
  Vertex root = 0;
};

/// All (S, r) with |S| = k over vertices 0..n-1: subsets in lexicographic
/// order, roots ascending within each subset.
std::vector<RootedSet> rooted_sets(int n, int k);

}  // namespace treeconn
