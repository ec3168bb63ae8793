#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

/// A generated packing question: does the instance have `threshold` trees
/// under `mode`? labels[v] names the source entity behind output vertex v.
struct ReductionOutput {
  SteinerInstance instance;
  int threshold = 0;
  Disjointness mode = Disjointness::kInternal;
  std::vector<std::string> labels;
};

struct Hypergraph {
  int n = 0;
  std::vector<std::vector<Vertex>> edges;
};

/// Throws InputError unless every edge has >= 2 distinct in-range vertices.
void validate(const Hypergraph& h);

/// Balanced tripartite graph: A = 0..q-1, B = q..2q-1, C = 2q..3q-1.
/// Edges are undirected pairs anywhere in 0..3q-1.
struct TripartiteInstance {
  int q = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

void validate(const TripartiteInstance& g);

/// Grows a 3-terminal question (S* = {r, s1, s2}, asking for 2 trees) into a
/// k-terminal question asking for l trees. Base vertices keep their ids;
/// then u_1..u_{l-2}, w_1..w_{l-2}, s_3..s_{k-1} follow. s1 < s2 are the
/// base sinks. The same graph serves both modes.
ReductionOutput amplify_3_2(const SteinerInstance& base, int k, int l,
                            Disjointness mode = Disjointness::kInternal);

/// Symmetric digraph on G's vertices plus r = 3q and s_i = 3q+i
/// (i = 1..k-1), asking for q internally disjoint trees. Needs k >= 3.
ReductionOutput cllm_reduce(const TripartiteInstance& g, int k);

/// A partition of the vertices into q transversal triples (a, b, c) with
/// G[{a,b,c}] connected, or nullopt.
std::optional<std::vector<std::array<Vertex, 3>>> cllm_solve(const TripartiteInstance& g);

/// Symmetric digraph with r = 0, hypergraph vertex x at 1+x, hyperedge j at
/// 1+n+j, then u_1..u_{l-2}; S = hyperedges and r; asks for l trees.
ReductionOutput hypergraph_reduce(const Hypergraph& h, int l);

/// Colour (0/1) per vertex with every edge bichromatic, or nullopt.
std::optional<std::vector<int>> hypergraph_2color(const Hypergraph& h);

/// Eulerian digraph D* from a linkage question on a balanced digraph h.
/// h keeps its ids; then r, u_1..u_{k-1}, v_1..v_{l-2}, and for k >= 4 one
/// more vertex y. S = {r} and U. For k >= 4, u_3..u_{k-1} hang off u_1 and
/// u_2 as two opposite chains rather than 2-cycles (see reductions.cpp).
/// Throws InputError if h is unbalanced, terminals are not distinct, k < 3,
/// l < 2, or D* comes out non-Eulerian (h has a part without terminals).
ReductionOutput eulerian_kappa_reduce(const Digraph& h, Vertex s1, Vertex t1, Vertex s2, Vertex t2, int k, int l);

}  // namespace treeconn
