#include "treeconn/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "treeconn/errors.hpp"

namespace treeconn {

Digraph Digraph::build(int n, std::vector<Arc> arcs, bool require_simple) {
  if (n < 0) throw InputError("negative vertex count");
  Digraph d;
  d.n_ = n;
  d.out_.resize(static_cast<std::size_t>(n));
  d.in_.resize(static_cast<std::size_t>(n));
  std::set<Arc> seen;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") has an endpoint out of range for n=" + std::to_string(n));
    }
    if (a.tail == a.head) throw InputError("loop at vertex " + std::to_string(a.tail));
    if (!seen.insert(a).second) {
      if (require_simple) {
        throw InputError("duplicate arc (" + std::to_string(a.tail) + "," +
                         std::to_string(a.head) + ")");
      }
      d.simple_ = false;
    }
    d.out_[static_cast<std::size_t>(a.tail)].push_back(static_cast<ArcId>(i));
    d.in_[static_cast<std::size_t>(a.head)].push_back(static_cast<ArcId>(i));
  }
  d.arcs_ = std::move(arcs);
  return d;
}

int Digraph::min_out_degree() const {
  int best = n_ == 0 ? 0 : out_degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, out_degree(v));
  return best;
}

int Digraph::min_in_degree() const {
  int best = n_ == 0 ? 0 : in_degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, in_degree(v));
  return best;
}

std::optional<ArcId> Digraph::find_arc(Vertex tail, Vertex head) const {
  if (!contains(tail) || !contains(head)) return std::nullopt;
  for (ArcId id : out_arcs(tail)) {
    if (arc(id).head == head) return id;
  }
  return std::nullopt;
}

Digraph complement(const Digraph& d) {
  if (!d.is_simple()) throw InputError("complement requires a simple digraph");
  const int n = d.order();
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !d.has_arc(u, v)) arcs.push_back({u, v});
    }
  }
  return Digraph::build(n, std::move(arcs), true);
}

Digraph reverse(const Digraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return Digraph::build(d.order(), std::move(arcs), d.is_simple());
}

bool is_symmetric(const Digraph& d) {
  return std::all_of(d.arcs().begin(), d.arcs().end(),
                     [&](const Arc& a) { return d.has_arc(a.head, a.tail); });
}

bool is_balanced(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) != d.out_degree(v)) return false;
  }
  return true;
}

namespace {

std::vector<bool> reachable(const Digraph& d, Vertex from, bool forward) {
  std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
  std::queue<Vertex> queue;
  seen[static_cast<std::size_t>(from)] = true;
  queue.push(from);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (ArcId id : forward ? d.out_arcs(v) : d.in_arcs(v)) {
      const Vertex w = forward ? d.arc(id).head : d.arc(id).tail;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        queue.push(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_eulerian(const Digraph& d) {
  if (!is_balanced(d)) return false;
  Vertex start = -1;
  for (Vertex v = 0; v < d.order() && start < 0; ++v) {
    if (d.out_degree(v) > 0) start = v;
  }
  if (start < 0) return true;
  // Balanced + every non-isolated vertex reachable from start implies strong.
  const auto seen = reachable(d, start, true);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_degree(v) > 0 && !seen[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

Digraph canonical(const Digraph& d) {
  std::vector<Arc> arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end());
  return Digraph::build(d.order(), std::move(arcs), d.is_simple());
}

Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!d.contains(vertices[i])) throw InputError("induced_subgraph: vertex out of range");
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const int t = index[static_cast<std::size_t>(a.tail)];
    const int h = index[static_cast<std::size_t>(a.head)];
    if (t >= 0 && h >= 0) arcs.push_back({t, h});
  }
  return Digraph::build(static_cast<int>(vertices.size()), std::move(arcs), d.is_simple());
}

Digraph spanning_subgraph(const Digraph& d, const std::vector<bool>& keep) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i < keep.size() && keep[i]) arcs.push_back(d.arcs()[i]);
  }
  return Digraph::build(d.order(), std::move(arcs), d.is_simple());
}

Digraph complete_symmetric(int n) {
  if (n < 1) throw InputError("complete_symmetric requires n >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::build(n, std::move(arcs), true);
}

Digraph complete_bipartite_symmetric(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete_bipartite_symmetric requires a, b >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
  }
  return Digraph::build(a + b, std::move(arcs), true);
}

Digraph directed_cycle(int n) {
  if (n < 2) throw InputError("directed_cycle requires n >= 2");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph::build(n, std::move(arcs), true);
}

Digraph directed_path(int n) {
  if (n < 1) throw InputError("directed_path requires n >= 1");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph::build(n, std::move(arcs), true);
}

Digraph symmetric_from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Arc> arcs;
  for (const auto& [u, v] : edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph::build(n, std::move(arcs), true);
}

}  // namespace treeconn
