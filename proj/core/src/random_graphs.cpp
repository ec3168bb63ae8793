#include "treeconn/random_graphs.hpp"

#include <algorithm>
#include <set>

#include "treeconn/errors.hpp"

namespace treeconn {

Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random digraph needs n >= 1");
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.push_back(Arc{u, v});
    }
  }
  return Digraph::build(n, std::move(arcs));
}

Digraph random_symmetric(int n, double p, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random symmetric digraph needs n >= 1");
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      arcs.push_back(Arc{u, v});
      arcs.push_back(Arc{v, u});
    }
  }
  return Digraph::build(n, std::move(arcs));
}

Digraph random_eulerian(int n, int cycles, std::mt19937_64& rng) {
  if (n < 2) throw InputError("random Eulerian digraph needs n >= 2");
  if (cycles < 1) throw InputError("random Eulerian digraph needs at least one cycle");
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::uniform_int_distribution<int> length(2, n);
  while (true) {
    std::set<Arc> arcs;
    for (int c = 0; c < cycles; ++c) {
      std::shuffle(order.begin(), order.end(), rng);
      const int len = length(rng);
      std::vector<Arc> cycle;
      for (int i = 0; i < len; ++i) {
        cycle.push_back(Arc{order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % len)]});
      }
      const bool clash = std::any_of(cycle.begin(), cycle.end(), [&](const Arc& a) { return arcs.count(a) != 0; });
      if (!clash) arcs.insert(cycle.begin(), cycle.end());
    }
    Digraph d = Digraph::build(n, std::vector<Arc>(arcs.begin(), arcs.end()));
    if (is_eulerian(d)) return d;
  }
}

}  // namespace treeconn
