#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace treeconn {

using Vertex = int;
using ArcId = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A directed multigraph on the vertex set {0, ..., n-1}.
///
/// Arc identity is the position in arcs(); parallel arcs are permitted unless
/// the graph was built with require_simple. Loops are always rejected.
/// Instances are immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Throws InputError on a loop, an out-of-range
  /// endpoint, or (when require_simple) a repeated (tail, head) pair.
  static Digraph build(int n, std::vector<Arc> arcs, bool require_simple = true);

  int order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_[static_cast<std::size_t>(id)]; }
  bool is_simple() const { return simple_; }

  std::span<const ArcId> out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const ArcId> in_arcs(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_arcs(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_arcs(v).size()); }
  int min_out_degree() const;
  int min_in_degree() const;

  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }
  /// Lowest-index arc from tail to head, if any.
  std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  bool simple_ = true;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

/// D^c: same vertices, exactly the non-loop arcs missing from d. Requires a simple graph.
Digraph complement(const Digraph& d);

/// D^rev: every arc flipped, multiplicities preserved, arc ids unchanged.
Digraph reverse(const Digraph& d);

/// Every arc lies on a 2-cycle.
bool is_symmetric(const Digraph& d);

/// Degree-balanced (counting multiplicities) and strongly connected on its
/// non-isolated vertices. A graph without arcs is Eulerian.
bool is_eulerian(const Digraph& d);

/// In-degree equals out-degree at every vertex; no connectivity requirement.
bool is_balanced(const Digraph& d);

/// Same graph with the arcs sorted by (tail, head); arc ids change.
Digraph canonical(const Digraph& d);

/// Subgraph on the given vertices, relabelled 0..|vertices|-1 in the given order.
Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices);

/// Spanning subgraph keeping only arcs for which keep[id] is true.
Digraph spanning_subgraph(const Digraph& d, const std::vector<bool>& keep);

/// <-> K_n: every ordered pair of distinct vertices.
Digraph complete_symmetric(int n);

/// <-> K_{a,b}: sides {0..a-1} and {a..a+b-1}, both directions between sides.
Digraph complete_bipartite_symmetric(int a, int b);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph directed_cycle(int n);

/// Directed path 0 -> 1 -> ... -> n-1.
Digraph directed_path(int n);

/// Symmetric digraph of an undirected edge list.
Digraph symmetric_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace treeconn
