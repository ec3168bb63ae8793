#include "treeconn/reductions.hpp"

#include <algorithm>
#include <set>

#include "treeconn/errors.hpp"

namespace treeconn {

namespace {

// Collects arcs and rejects repeats, which the constructions never produce.
class ArcBuilder {
 public:
  void add(Vertex u, Vertex v) {
    if (!seen_.insert(Arc{u, v}).second) throw InputError("construction repeats an arc");
    arcs_.push_back(Arc{u, v});
  }
  void both(Vertex u, Vertex v) {
    add(u, v);
    add(v, u);
  }
  std::vector<Arc> take() { return std::move(arcs_); }

 private:
  std::set<Arc> seen_;
  std::vector<Arc> arcs_;
};

std::string indexed(const char* prefix, int i) { return std::string(prefix) + std::to_string(i); }

}  // namespace

void validate(const Hypergraph& h) {
  if (h.n < 0) throw InputError("hypergraph vertex count is negative");
  for (const auto& e : h.edges) {
    if (e.size() < 2) throw InputError("hyperedge with fewer than 2 vertices");
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("hyperedge repeats a vertex");
    if (sorted.front() < 0 || sorted.back() >= h.n) throw InputError("hyperedge vertex out of range");
  }
}

void validate(const TripartiteInstance& g) {
  if (g.q < 1) throw InputError("tripartite instance needs q >= 1");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= 3 * g.q || v >= 3 * g.q) throw InputError("tripartite edge out of range");
    if (u == v) throw InputError("tripartite edge is a loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw InputError("tripartite edge repeated");
  }
}

ReductionOutput amplify_3_2(const SteinerInstance& base, int k, int l, Disjointness mode) {
  if (base.k() != 3) throw InputError("base instance needs exactly 3 terminals");
  if (k < 3) throw InputError("k must be at least 3");
  if (l < 2) throw InputError("l must be at least 2");
  const Digraph& b = base.graph();
  const int n0 = b.order();
  const Vertex r = base.root();
  const auto sinks = base.sinks();
  const Vertex s1 = sinks[0];
  const Vertex s2 = sinks[1];
  const int extra = l - 2;
  const Vertex u0 = n0;
  const Vertex w0 = n0 + extra;
  const Vertex x0 = n0 + 2 * extra;  // s_3
  const int n = x0 + (k - 3);

  std::vector<std::string> labels;
  for (Vertex v = 0; v < n0; ++v) {
    labels.push_back(v == r ? "r" : v == s1 ? "s1" : v == s2 ? "s2" : indexed("base", v));
  }
  for (int i = 1; i <= extra; ++i) labels.push_back(indexed("u", i));
  for (int i = 1; i <= extra; ++i) labels.push_back(indexed("w", i));
  for (int j = 3; j <= k - 1; ++j) labels.push_back(indexed("s", j));

  std::vector<Vertex> terminals{r, s1, s2};
  for (int j = 0; j < k - 3; ++j) terminals.push_back(x0 + j);

  ArcBuilder arcs;
  for (const Arc& a : b.arcs()) arcs.add(a.tail, a.head);
  for (int i = 0; i < extra; ++i) {
    arcs.add(r, u0 + i);
    arcs.add(u0 + i, w0 + i);
    for (Vertex s : terminals) {
      if (s != r) arcs.add(w0 + i, s);
    }
  }
  for (Vertex s : {s1, s2}) {
    for (int j = 0; j < k - 3; ++j) arcs.add(s, x0 + j);
  }
  Digraph d = Digraph::build(n, arcs.take(), b.is_simple());
  return ReductionOutput{SteinerInstance::create(std::move(d), terminals, r), l, mode, std::move(labels)};
}

ReductionOutput cllm_reduce(const TripartiteInstance& g, int k) {
  validate(g);
  if (k < 3) throw InputError("k must be at least 3");
  const int q = g.q;
  const Vertex r = 3 * q;
  const int n = 3 * q + k;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < 3 * q; ++v) labels.push_back(indexed(v < q ? "a" : v < 2 * q ? "b" : "c", v % q));
  labels.push_back("r");
  for (int i = 1; i < k; ++i) labels.push_back(indexed("s", i));

  ArcBuilder arcs;
  for (auto [u, v] : g.edges) arcs.both(u, v);
  for (Vertex a = 0; a < q; ++a) arcs.both(r, a);
  for (Vertex bv = q; bv < 2 * q; ++bv) arcs.both(r + 1, bv);
  for (int i = 2; i < k; ++i) {
    for (Vertex c = 2 * q; c < 3 * q; ++c) arcs.both(r + i, c);
  }
  std::vector<Vertex> terminals;
  for (int i = 0; i < k; ++i) terminals.push_back(r + i);
  return ReductionOutput{SteinerInstance::create(Digraph::build(n, arcs.take()), terminals, r), q,
                         Disjointness::kInternal, std::move(labels)};
}

std::optional<std::vector<std::array<Vertex, 3>>> cllm_solve(const TripartiteInstance& g) {
  validate(g);
  const int q = g.q;
  const int n = 3 * q;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [u, v] : g.edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  auto connected = [&](Vertex a, Vertex b, Vertex c) {
    const int ab = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    const int bc = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
    const int ac = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
    return ab + bc + ac >= 2;
  };
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<std::array<Vertex, 3>> triples;
  auto search = [&](auto& self, Vertex a) -> bool {
    if (a == q) return true;
    for (Vertex b = q; b < 2 * q; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      for (Vertex c = 2 * q; c < 3 * q; ++c) {
        if (used[static_cast<std::size_t>(c)] || !connected(a, b, c)) continue;
        used[static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(c)] = true;
        triples.push_back({a, b, c});
        if (self(self, a + 1)) return true;
        triples.pop_back();
        used[static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(c)] = false;
      }
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return triples;
}

ReductionOutput hypergraph_reduce(const Hypergraph& h, int l) {
  validate(h);
  if (l < 2) throw InputError("l must be at least 2");
  if (h.edges.empty()) throw InputError("hypergraph needs at least one edge");
  const int m = static_cast<int>(h.edges.size());
  const Vertex r = 0;
  auto vx = [](Vertex x) { return 1 + x; };
  auto ve = [&](int j) { return 1 + h.n + j; };
  const Vertex u0 = 1 + h.n + m;
  const int n = u0 + (l - 2);
  std::vector<std::string> labels{"r"};
  for (Vertex x = 0; x < h.n; ++x) labels.push_back(indexed("x", x));
  for (int j = 0; j < m; ++j) labels.push_back(indexed("e", j));
  for (int i = 1; i <= l - 2; ++i) labels.push_back(indexed("u", i));

  ArcBuilder arcs;
  for (int j = 0; j < m; ++j) {
    for (Vertex x : h.edges[static_cast<std::size_t>(j)]) arcs.both(vx(x), ve(j));
  }
  for (int i = 0; i < l - 2; ++i) {
    arcs.both(r, u0 + i);
    for (int j = 0; j < m; ++j) arcs.both(u0 + i, ve(j));
  }
  for (Vertex x = 0; x < h.n; ++x) arcs.both(r, vx(x));
  std::vector<Vertex> terminals{r};
  for (int j = 0; j < m; ++j) terminals.push_back(ve(j));
  return ReductionOutput{SteinerInstance::create(Digraph::build(n, arcs.take()), terminals, r), l,
                         Disjointness::kInternal, std::move(labels)};
}

std::optional<std::vector<int>> hypergraph_2color(const Hypergraph& h) {
  validate(h);
  if (h.n > 30) throw BudgetExceeded("2-colouring search limited to 30 vertices");
  const std::uint64_t limit = std::uint64_t{1} << h.n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const bool ok = std::all_of(h.edges.begin(), h.edges.end(), [&](const std::vector<Vertex>& e) {
      bool zero = false;
      bool one = false;
      for (Vertex x : e) ((mask >> x) & 1U ? one : zero) = true;
      return zero && one;
    });
    if (!ok) continue;
    std::vector<int> colour(static_cast<std::size_t>(h.n));
    for (Vertex x = 0; x < h.n; ++x) colour[static_cast<std::size_t>(x)] = static_cast<int>((mask >> x) & 1U);
    return colour;
  }
  return std::nullopt;
}

ReductionOutput eulerian_kappa_reduce(const Digraph& h, Vertex s1, Vertex t1, Vertex s2, Vertex t2, int k, int l) {
  const std::vector<Vertex> ends{s1, t1, s2, t2};
  for (Vertex v : ends) {
    if (!h.contains(v)) throw InputError("linkage terminal out of range");
  }
  std::vector<Vertex> sorted = ends;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("linkage terminals must be distinct");
  if (!is_balanced(h)) throw InputError("linkage digraph must have in-degree equal to out-degree everywhere");
  if (k < 3) throw InputError("k must be at least 3");
  if (l < 2) throw InputError("l must be at least 2");

  const int h_n = h.order();
  const Vertex r = h_n;
  auto u = [&](int i) { return h_n + i; };               // i = 1..k-1
  auto v = [&](int i) { return h_n + k - 1 + i; };       // i = 1..l-2
  const Vertex y = h_n + k + (l - 2);                    // only when k >= 4
  const int n = h_n + k + (l - 2) + (k >= 4 ? 1 : 0);
  std::vector<std::string> labels;
  for (Vertex x = 0; x < h_n; ++x) {
    labels.push_back(x == s1 ? "s1" : x == t1 ? "t1" : x == s2 ? "s2" : x == t2 ? "t2" : indexed("h", x));
  }
  labels.push_back("r");
  for (int i = 1; i < k; ++i) labels.push_back(indexed("u", i));
  for (int i = 1; i <= l - 2; ++i) labels.push_back(indexed("v", i));
  if (k >= 4) labels.push_back("y");

  ArcBuilder arcs;
  for (const Arc& a : h.arcs()) arcs.add(a.tail, a.head);
  arcs.add(r, s1);
  arcs.add(r, s2);
  arcs.both(t1, u(1));
  arcs.both(t2, u(2));
  arcs.add(s1, u(2));
  arcs.add(s2, u(1));
  for (int i = 1; i <= l - 2; ++i) {
    arcs.add(r, v(i));
    arcs.add(v(i), r);
    for (int j = 1; j < k; ++j) arcs.both(v(i), u(j));
  }
  if (k == 3) {
    arcs.add(u(1), r);
    arcs.add(u(2), r);
  } else {
    // 2-cycles between u_1, u_2 and u_3..u_{k-1} would let a tree enter u_1
    // from u_2 and make every output a yes-instance. Instead u_1 feeds a chain
    // u_3 -> ... -> u_{k-1}, u_2 feeds the reverse chain, and both chain ends
    // drain back to r (one of them through y, to keep the digraph simple).
    arcs.add(u(1), u(3));
    arcs.add(u(2), u(k - 1));
    for (int j = 3; j + 1 < k; ++j) arcs.both(u(j), u(j + 1));
    arcs.add(u(3), r);
    arcs.add(u(k - 1), y);
    arcs.add(y, r);
  }
  Digraph d = Digraph::build(n, arcs.take());
  if (!is_eulerian(d)) throw InputError("linkage digraph has arcs in a part containing no terminal");
  std::vector<Vertex> terminals{r};
  for (int i = 1; i < k; ++i) terminals.push_back(u(i));
  return ReductionOutput{SteinerInstance::create(std::move(d), terminals, r), l, Disjointness::kInternal,
                         std::move(labels)};
}

}  // namespace treeconn
