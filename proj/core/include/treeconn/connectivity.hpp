#pragma once

#include <optional>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

/// A maximum family of disjoint (x,y)-paths.
struct FlowResult {
  int value = 0;
  /// Vertex sequences x, ..., y; one per path.
  std::vector<std::vector<Vertex>> paths;
  /// The same paths as arc ids of the input graph.
  std::vector<std::vector<ArcId>> arc_paths;
};

/// lambda(x,y): maximum number of arc-disjoint (x,y)-paths. Throws InputError if x == y.
FlowResult lambda_local(const Digraph& d, Vertex x, Vertex y);

/// kappa(x,y): maximum number of internally vertex-disjoint (x,y)-paths.
/// Every direct arc x->y counts as its own path. Throws InputError if x == y.
FlowResult kappa_local(const Digraph& d, Vertex x, Vertex y);

/// lambda(D). Throws InputError if n < 2.
int global_lambda(const Digraph& d);

/// kappa(D): n-1 for <->K_n, otherwise the minimum kappa(x,y) over ordered
/// pairs with no arc x->y. Throws InputError if n < 2.
int global_kappa(const Digraph& d);

bool is_strong(const Digraph& d);

/// A spanning out-tree rooted at r (BFS order), or nullopt if some vertex is unreachable.
std::optional<OutTree> find_out_branching(const Digraph& d, Vertex r);

/// Replays a FlowResult: endpoints, arc existence, and pairwise disjointness
/// (arc-disjoint, or additionally internally vertex-disjoint when vertex_mode).
bool verify_flow_paths(const Digraph& d, Vertex x, Vertex y, const FlowResult& flow, bool vertex_mode);

}  // namespace treeconn
