#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

/// lambda_{S,r}(D) for an Eulerian digraph: min over s in S - r of lambda(r, s).
/// Value only; use packing_at_least() with this value for a certificate.
/// Throws InputError if the graph is not Eulerian.
int eulerian_lambda(const SteinerInstance& inst);

/// A contracted (S,r)-tree: S plus branch vertices outside S, joined by
/// skeleton arcs. A skeleton arc is either a real arc inside D[S] ("direct")
/// or stands for a path whose internal vertices avoid S.
struct SkeletonArc {
  Vertex tail = 0;
  Vertex head = 0;
  bool direct = false;

  friend bool operator==(const SkeletonArc&, const SkeletonArc&) = default;
};

struct Skeleton {
  std::vector<Vertex> vertices;  // S and the branch vertices, ascending
  std::vector<Vertex> branch;    // vertices outside S
  std::vector<SkeletonArc> arcs;
};

/// Reason the skeleton breaks its invariants (out-tree rooted at r on its
/// vertices, <= 2k-2 vertices, leaves in S, branch vertices of degree >= 3).
std::optional<std::string> skeleton_violation(const SteinerInstance& inst, const Skeleton& skeleton);

/// A_0, A_1, ..., A_l: disjoint arc-id sets covering the arcs of D[S].
/// A_0 holds the arcs used by no tree.
struct ArcPartition {
  std::vector<std::vector<ArcId>> parts;
};

std::optional<std::string> partition_violation(const SteinerInstance& inst, const ArcPartition& partition);

struct SymmetricBudget {
  /// Refuse when (l+1)^|A(D[S])| exceeds this.
  double max_partitions = 1e12;
  /// Refuse when the instance has more candidate skeletons than this.
  std::size_t max_skeletons = 500'000;
};

/// Every skeleton the symmetric search considers for the instance: S plus up
/// to k-2 branch vertices, leaves in S, each branch vertex with >= 2 children,
/// every S-S arc that exists in D tried both direct and as a path. Candidates
/// whose own paths cannot be realised are dropped.
std::vector<Skeleton> candidate_skeletons(const SteinerInstance& inst, const SymmetricBudget& budget = {});

/// l internally disjoint (S,r)-trees T_1..T_l with A(T_i) ∩ A(D[S]) = A_i,
/// or nullopt. Requires a symmetric digraph and partition.parts.size() == l+1.
std::optional<TreePacking> skeleton_search(const SteinerInstance& inst, int l,
                                           const ArcPartition& partition,
                                           const SymmetricBudget& budget = {});

/// Decides kappa_{S,r}(D) >= l on a symmetric digraph, returning l internally
/// disjoint (S,r)-trees when they exist. Partitions of A(D[S]) are explored
/// part by part together with the skeleton of each tree.
/// Throws InputError on a non-symmetric graph or l < 1, BudgetExceeded past budget.
std::optional<TreePacking> symmetric_kappa_decide(const SteinerInstance& inst, int l,
                                                  const SymmetricBudget& budget = {});

/// Calls visit for every partition of A(D[S]) into l+1 parts whose parts
/// A_1..A_l could each lie in an out-tree rooted at r (no arc into r, at most
/// one arc into any vertex, acyclic). visit returns false to stop.
void for_each_arc_partition(const SteinerInstance& inst, int l,
                            const std::function<bool(const ArcPartition&)>& visit);

/// Arcs of D with both ends in S, ascending by id.
std::vector<ArcId> terminal_arcs(const SteinerInstance& inst);

}  // namespace treeconn
