#include "treeconn/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "treeconn/errors.hpp"

namespace treeconn {

TreePacking complete_packing(int n, const std::vector<Vertex>& terminals, Vertex root) {
  const Digraph kn = complete_symmetric(n);
  const SteinerInstance inst = SteinerInstance::create(kn, terminals, root);
  std::vector<Vertex> others = inst.sinks();
  TreePacking packing;
  packing.mode = Disjointness::kInternal;
  for (Vertex u : others) {
    std::vector<Arc> pairs{{root, u}};
    for (Vertex s : others) {
      if (s != u) pairs.push_back(Arc{u, s});
    }
    packing.trees.push_back(tree_from_pairs(kn, root, pairs));
  }
  for (Vertex w = 0; w < n; ++w) {
    if (inst.is_terminal(w)) continue;
    std::vector<Arc> pairs{{root, w}};
    for (Vertex s : others) pairs.push_back(Arc{w, s});
    packing.trees.push_back(tree_from_pairs(kn, root, pairs));
  }
  return packing;
}

GluedCliques glued_cliques(int t) {
  if (t < 4) throw InputError("glued cliques need t >= 4");
  std::vector<Arc> arcs;
  auto clique = [&](Vertex first) {
    for (Vertex u = first; u < first + t; ++u) {
      for (Vertex v = first; v < first + t; ++v) {
        if (u != v) arcs.push_back(Arc{u, v});
      }
    }
  };
  clique(0);
  clique(t - 1);
  return GluedCliques{Digraph::build(2 * t - 1, std::move(arcs)), t - 1};
}

Digraph join_family(int k, int n) {
  if (k < 1) throw InputError("join family needs k >= 1");
  if (n < 3 * k) throw InputError("join family needs n >= 3k");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex w = 0; w < k; ++w) {
    for (Vertex x = w + 1; x < k; ++x) edges.emplace_back(w, x);
    for (Vertex u = k; u < n; ++u) edges.emplace_back(w, u);
  }
  return symmetric_from_edges(n, edges);
}

std::vector<std::vector<Vertex>> ham_decompose_bipartite(int a) {
  if (a < 2) throw InputError("Hamiltonian decomposition needs a >= 2");
  std::vector<std::vector<Vertex>> cycles;
  auto cycle = [a](int j) {
    std::vector<Vertex> c;
    for (int i = 0; i < a; ++i) {
      c.push_back(i);
      c.push_back(a + (i + j) % a);
    }
    return c;
  };
  for (int j = 1; j < a; ++j) cycles.push_back(cycle(j));
  cycles.push_back(cycle(0));
  return cycles;
}

std::optional<std::string> ham_decomposition_violation(int a, const std::vector<std::vector<Vertex>>& cycles) {
  if (static_cast<int>(cycles.size()) != a) return "expected " + std::to_string(a) + " cycles";
  std::set<Arc> seen;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& cyc = cycles[c];
    if (static_cast<int>(cyc.size()) != 2 * a) return "cycle " + std::to_string(c) + " is not Hamiltonian";
    std::vector<Vertex> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < 2 * a; ++v) {
      if (sorted[static_cast<std::size_t>(v)] != v) return "cycle " + std::to_string(c) + " misses a vertex";
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Arc arc{cyc[i], cyc[(i + 1) % cyc.size()]};
      if ((arc.tail < a) == (arc.head < a)) return "cycle " + std::to_string(c) + " stays on one side";
      if (!seen.insert(arc).second) return "arc used twice";
    }
  }
  if (static_cast<int>(seen.size()) != 2 * a * a) return "cycles do not cover every arc";
  return std::nullopt;
}

NordhausGaddumPair nordhaus_gaddum_pair(int a) {
  const auto cycles = ham_decompose_bipartite(a);
  const int n = 2 * a;
  std::vector<Arc> arcs;
  for (int j = 0; j + 1 < a; ++j) {
    const auto& c = cycles[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < c.size(); ++i) arcs.push_back(Arc{c[i], c[(i + 1) % c.size()]});
  }
  NordhausGaddumPair pair;
  pair.graph = Digraph::build(n, std::move(arcs));
  pair.complement = complement(pair.graph);
  pair.root = 0;

  // u_i = i-1, v_i = a+i-1 (1-based i).
  auto u = [](int i) { return i - 1; };
  auto v = [a](int i) { return a + i - 1; };
  const Digraph& dc = pair.complement;
  pair.certificate.mode = Disjointness::kArc;
  for (int i = 1; i < a; ++i) {
    const int hub = i + 1;
    std::vector<Arc> p{{u(1), u(hub)}};
    for (int x = 2; x <= a; ++x) {
      if (x != hub) p.push_back(Arc{u(hub), u(x)});
    }
    p.push_back(Arc{u(hub), v(hub)});
    for (int x = 1; x <= a; ++x) {
      if (x != hub) p.push_back(Arc{v(hub), v(x)});
    }
    pair.certificate.trees.push_back(tree_from_pairs(dc, pair.root, p));
  }
  std::vector<Arc> last{{u(1), v(1)}};
  for (int x = 2; x <= a; ++x) last.push_back(Arc{v(1), v(x)});
  for (int i = 1; i < a; ++i) last.push_back(Arc{v(i), u(i + 1)});
  pair.certificate.trees.push_back(tree_from_pairs(dc, pair.root, last));
  return pair;
}

}  // namespace treeconn
