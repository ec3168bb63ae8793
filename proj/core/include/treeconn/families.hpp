#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

/// n-1 internally disjoint (S,r)-trees of complete_symmetric(n), arc ids
/// referring to that digraph. k-1 trees stay inside S (r -> u, then u -> rest
/// of S); each vertex w outside S carries one tree r -> w -> S - r.
/// Throws InputError on a bad S or r.
TreePacking complete_packing(int n, const std::vector<Vertex>& terminals, Vertex root);

/// Two copies of <->K_t sharing one vertex. Vertices 0..t-1 form the first
/// clique, t-1..2t-2 the second, so the cut vertex is t-1.
/// kappa_k = 1 for 2 <= k <= 2t-2, kappa_{2t-1} >= floor(t/2). Needs t >= 4.
struct GluedCliques {
  Digraph graph;
  Vertex cut_vertex = 0;
};
GluedCliques glued_cliques(int t);

/// Symmetric digraph whose underlying graph is K_k joined to an independent
/// set of n-k vertices: 0..k-1 are the clique, k..n-1 the independent set.
/// kappa_k = lambda_k = kappa = lambda = k. Needs n >= 3k.
Digraph join_family(int k, int n);

/// a arc-disjoint Hamiltonian cycles covering <->K_{a,a} (u_i = i-1,
/// v_i = a+i-1). Cycle j visits u_1 v_{1+j} u_2 v_{2+j} ... (indices mod a);
/// cycles j = 1..a-1 come first and u_1 v_1 u_2 v_2 ... u_a v_a is last.
/// Each cycle is its vertex sequence without the closing repeat. Needs a >= 2.
std::vector<std::vector<Vertex>> ham_decompose_bipartite(int a);

/// Reason the cycles are not a Hamiltonian decomposition of <->K_{a,a}.
std::optional<std::string> ham_decomposition_violation(int a, const std::vector<std::vector<Vertex>>& cycles);

/// D = union of the first a-1 cycles above, with lambda_k(D) = a-1; its
/// complement has lambda_k = a. The certificate holds a arc-disjoint
/// out-branchings of the complement rooted at u_1 (terminals = all vertices).
struct NordhausGaddumPair {
  Digraph graph;
  Digraph complement;
  Vertex root = 0;
  TreePacking certificate;
};
NordhausGaddumPair nordhaus_gaddum_pair(int a);

}  // namespace treeconn
