#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

/// Size limits for the exponential-time searches. Hard limits of 64 vertices
/// and 256 arcs apply regardless of these values.
struct ExactBudget {
  int max_vertices = 12;
  int max_arcs = 48;
  /// Minimal-tree enumeration above this count switches max_packing to
  /// incremental depth-first packing.
  std::size_t tree_cap = 50'000;
};

inline constexpr int kHardMaxVertices = 64;
inline constexpr int kHardMaxArcs = 256;

/// Throws BudgetExceeded if d does not fit the budget.
void check_budget(const Digraph& d, const ExactBudget& budget);

struct PackingAnswer {
  int value = 0;
  TreePacking certificate;
};

struct GlobalAnswer {
  int value = 0;
  std::vector<Vertex> witness_terminals;
  Vertex witness_root = 0;
};

/// Every inclusion-minimal (S,r)-tree (equivalently: every (S,r)-tree whose
/// leaves all lie in S), each exactly once. Throws BudgetExceeded if more
/// than cap trees exist.
std::vector<OutTree> enumerate_minimal_trees(const SteinerInstance& inst,
                                             std::size_t cap = 50'000);

/// lambda_{S,r} (mode kArc) or kappa_{S,r} (mode kInternal) with a certificate.
PackingAnswer max_packing(const SteinerInstance& inst, Disjointness mode,
                          const ExactBudget& budget = {});

/// A packing of exactly l trees if one exists. Stops as soon as l trees are found.
std::optional<TreePacking> packing_at_least(const SteinerInstance& inst, Disjointness mode, int l,
                                            const ExactBudget& budget = {});

/// lambda_k(D) / kappa_k(D): minimum over all k-subsets S and roots r in S.
/// The witness is the lexicographically smallest minimising (S, r).
/// Throws InputError unless 2 <= k <= n.
GlobalAnswer global_tree_connectivity(const Digraph& d, int k, Disjointness mode,
                                      const ExactBudget& budget = {});

/// For each pair (s_i, t_i) a path in the underlying graph of the symmetric
/// digraph d such that no internal vertex lies in avoid or on any other path
/// (endpoints of other paths included). Endpoints may repeat across pairs.
/// Returns vertex sequences in pair order, or nullopt if no such family exists.
/// Throws InputError if d is not symmetric or some s_i == t_i.
std::optional<std::vector<std::vector<Vertex>>> disjoint_paths_undirected(
    const Digraph& d, std::span<const std::pair<Vertex, Vertex>> pairs,
    std::span<const Vertex> avoid);

/// Vertex-disjoint directed (s1,t1)- and (s2,t2)-paths, or nullopt.
/// Throws InputError unless the four vertices are distinct.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> two_linkage_directed(
    const Digraph& d, Vertex s1, Vertex t1, Vertex s2, Vertex t2);

}  // namespace treeconn
