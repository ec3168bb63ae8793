#include "treeconn/steiner.hpp"

#include <algorithm>
#include <set>

#include "treeconn/errors.hpp"

namespace treeconn {

std::string_view to_string(Disjointness mode) {
  return mode == Disjointness::kArc ? "arc" : "vertex";
}

Disjointness parse_disjointness(std::string_view text) {
  if (text == "arc") return Disjointness::kArc;
  if (text == "vertex" || text == "internal") return Disjointness::kInternal;
  throw InputError("unknown disjointness mode '" + std::string(text) + "'");
}

SteinerInstance SteinerInstance::create(Digraph graph, std::vector<Vertex> terminals, Vertex root) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  for (Vertex v : terminals) {
    if (!graph.contains(v)) throw InputError("terminal " + std::to_string(v) + " out of range");
  }
  if (terminals.size() < 2) throw InputError("terminal set needs at least two vertices");
  if (!std::binary_search(terminals.begin(), terminals.end(), root)) {
    throw InputError("root " + std::to_string(root) + " is not a terminal");
  }
  SteinerInstance inst;
  inst.is_terminal_.assign(static_cast<std::size_t>(graph.order()), false);
  for (Vertex v : terminals) inst.is_terminal_[static_cast<std::size_t>(v)] = true;
  inst.graph_ = std::move(graph);
  inst.terminals_ = std::move(terminals);
  inst.root_ = root;
  return inst;
}

std::vector<Vertex> SteinerInstance::sinks() const {
  std::vector<Vertex> out;
  for (Vertex v : terminals_) {
    if (v != root_) out.push_back(v);
  }
  return out;
}

std::optional<std::string> out_tree_violation(const Digraph& host, const OutTree& tree) {
  if (!host.contains(tree.root)) return "root out of range";
  const auto n = static_cast<std::size_t>(host.order());
  std::vector<int> indegree(n, 0);
  std::vector<bool> present(n, false);
  std::vector<std::vector<Vertex>> children(n);
  std::set<ArcId> ids;
  present[static_cast<std::size_t>(tree.root)] = true;
  for (ArcId id : tree.arcs) {
    if (id < 0 || static_cast<std::size_t>(id) >= host.size()) return "arc id out of range";
    if (!ids.insert(id).second) return "arc " + std::to_string(id) + " repeated";
    const Arc& a = host.arc(id);
    ++indegree[static_cast<std::size_t>(a.head)];
    present[static_cast<std::size_t>(a.tail)] = true;
    present[static_cast<std::size_t>(a.head)] = true;
    children[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }
  if (indegree[static_cast<std::size_t>(tree.root)] != 0) return "root has an entering arc";
  std::size_t vertex_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!present[v]) continue;
    ++vertex_count;
    if (static_cast<Vertex>(v) != tree.root && indegree[v] != 1) {
      return "vertex " + std::to_string(v) + " has in-degree " + std::to_string(indegree[v]);
    }
  }
  // In-degree 1 everywhere but the root; acyclic iff every vertex is reached.
  std::vector<Vertex> stack{tree.root};
  std::size_t reached = 0;
  std::vector<bool> seen(n, false);
  seen[static_cast<std::size_t>(tree.root)] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : children[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) return "arc set contains a cycle not reachable from the root";
  return std::nullopt;
}

std::vector<Vertex> tree_vertices(const Digraph& host, const OutTree& tree) {
  std::vector<Vertex> vs{tree.root};
  for (ArcId id : tree.arcs) {
    vs.push_back(host.arc(id).tail);
    vs.push_back(host.arc(id).head);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::optional<std::string> steiner_tree_violation(const SteinerInstance& inst, const OutTree& tree) {
  if (tree.root != inst.root()) return "tree is not rooted at r";
  if (auto why = out_tree_violation(inst.graph(), tree)) return why;
  const auto vs = tree_vertices(inst.graph(), tree);
  for (Vertex s : inst.terminals()) {
    if (!std::binary_search(vs.begin(), vs.end(), s)) {
      return "terminal " + std::to_string(s) + " not spanned";
    }
  }
  return std::nullopt;
}

std::optional<std::string> packing_violation(const SteinerInstance& inst, const TreePacking& packing) {
  std::vector<int> arc_owner(inst.graph().size(), -1);
  std::vector<int> vertex_owner(static_cast<std::size_t>(inst.graph().order()), -1);
  for (std::size_t i = 0; i < packing.trees.size(); ++i) {
    const OutTree& tree = packing.trees[i];
    if (auto why = steiner_tree_violation(inst, tree)) {
      return "tree " + std::to_string(i) + ": " + *why;
    }
    for (ArcId id : tree.arcs) {
      int& owner = arc_owner[static_cast<std::size_t>(id)];
      if (owner >= 0) {
        return "trees " + std::to_string(owner) + " and " + std::to_string(i) + " share arc " +
               std::to_string(id);
      }
      owner = static_cast<int>(i);
    }
    if (packing.mode == Disjointness::kInternal) {
      for (Vertex v : tree_vertices(inst.graph(), tree)) {
        if (inst.is_terminal(v)) continue;
        int& owner = vertex_owner[static_cast<std::size_t>(v)];
        if (owner >= 0) {
          return "trees " + std::to_string(owner) + " and " + std::to_string(i) +
                 " share non-terminal vertex " + std::to_string(v);
        }
        owner = static_cast<int>(i);
      }
    }
  }
  return std::nullopt;
}

OutTree tree_from_pairs(const Digraph& host, Vertex root, const std::vector<Arc>& pairs) {
  OutTree tree{root, {}};
  for (const Arc& p : pairs) {
    auto id = host.find_arc(p.tail, p.head);
    if (!id) {
      throw InputError("(" + std::to_string(p.tail) + "," + std::to_string(p.head) +
                       ") is not an arc of the host graph");
    }
    tree.arcs.push_back(*id);
  }
  std::sort(tree.arcs.begin(), tree.arcs.end());
  return tree;
}

std::vector<Arc> tree_pairs(const Digraph& host, const OutTree& tree) {
  std::vector<Arc> out;
  out.reserve(tree.arcs.size());
  for (ArcId id : tree.arcs) out.push_back(host.arc(id));
  return out;
}

std::vector<RootedSet> rooted_sets(int n, int k) {
  std::vector<RootedSet> result;
  if (k < 1 || k > n) return result;
  std::vector<Vertex> set(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) set[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (Vertex r : set) result.push_back(RootedSet{set, r});
    int pos = k - 1;
    while (pos >= 0 && set[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++set[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
  }
  return result;
}

}  // namespace treeconn
