#include <random>
#include <set>

#include "doctest.h"

#include "treeconn/errors.hpp"
#include "treeconn/packing_exact.hpp"
#include "treeconn/reductions.hpp"

using namespace treeconn;

namespace {

bool meets(const ReductionOutput& out) {
  return packing_at_least(out.instance, out.mode, out.threshold).has_value();
}

}  // namespace

TEST_CASE("amplify") {
  const auto k3 = SteinerInstance::create(complete_symmetric(3), {0, 1, 2}, 0);
  const auto big = amplify_3_2(k3, 4, 3);
  CHECK(big.instance.k() == 4);
  CHECK(big.instance.graph().order() == 3 + 1 + 1 + 1);
  CHECK(big.labels == std::vector<std::string>{"r", "s1", "s2", "u1", "w1", "s3"});
  CHECK(max_packing(big.instance, Disjointness::kInternal).value >= 3);

  const auto path = SteinerInstance::create(directed_path(3), {0, 1, 2}, 0);
  const auto small = amplify_3_2(path, 3, 2);
  CHECK(max_packing(small.instance, Disjointness::kInternal).value < 2);
  CHECK(small.instance.graph() == path.graph());
  CHECK(small.instance.terminals() == path.terminals());

  CHECK_THROWS_AS(amplify_3_2(SteinerInstance::create(directed_path(3), {0, 2}, 0), 3, 2), InputError);
  CHECK_THROWS_AS(amplify_3_2(k3, 2, 2), InputError);
  CHECK_THROWS_AS(amplify_3_2(k3, 3, 1), InputError);
}

TEST_CASE("cllm reduction") {
  const TripartiteInstance tri{1, {{0, 1}, {1, 2}}};
  CHECK(cllm_solve(tri).has_value());
  const auto one = cllm_reduce(tri, 3);
  CHECK(is_symmetric(one.instance.graph()));
  CHECK(one.threshold == 1);
  CHECK(meets(one));

  // two disjoint triangles, one vertex per part each
  const TripartiteInstance two{2, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}}};
  const auto sol = cllm_solve(two);
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<std::array<Vertex, 3>>{{0, 2, 4}, {1, 3, 5}});
  CHECK(meets(cllm_reduce(two, 3)));

  // no A-B edges, and A-C / B-C edges never share a transversal triple
  const TripartiteInstance none{2, {{0, 4}, {3, 5}}};
  CHECK_FALSE(cllm_solve(none).has_value());
  CHECK_FALSE(meets(cllm_reduce(none, 3)));

  // isolated vertex in A
  const TripartiteInstance isolated{2, {{1, 2}, {2, 4}, {1, 3}, {3, 5}}};
  CHECK_FALSE(cllm_solve(isolated).has_value());

  CHECK_THROWS_AS(cllm_reduce(tri, 2), InputError);
  CHECK_THROWS_AS(cllm_reduce(TripartiteInstance{1, {{0, 0}}}, 3), InputError);
  CHECK_THROWS_AS(cllm_reduce(TripartiteInstance{1, {{0, 1}, {1, 0}}}, 3), InputError);
}

TEST_CASE("hypergraph reduction") {
  const Hypergraph edge{2, {{0, 1}}};
  CHECK(hypergraph_2color(edge).has_value());
  const auto out = hypergraph_reduce(edge, 2);
  CHECK(out.instance.graph().order() == 4);
  CHECK(is_symmetric(out.instance.graph()));
  CHECK(max_packing(out.instance, Disjointness::kInternal).value >= 2);

  const Hypergraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK_FALSE(hypergraph_2color(triangle).has_value());
  const auto bad = hypergraph_reduce(triangle, 2);
  CHECK(bad.instance.graph().order() == 3 + 3 + 1);
  CHECK(max_packing(bad.instance, Disjointness::kInternal).value < 2);

  const auto wide = hypergraph_reduce(edge, 4);
  CHECK(wide.labels.back() == "u2");
  CHECK(meets(wide));

  CHECK_THROWS_AS(hypergraph_reduce(Hypergraph{2, {{0}}}, 2), InputError);
  CHECK_THROWS_AS(hypergraph_reduce(edge, 1), InputError);
}

TEST_CASE("property: 2-colouring agrees with a second enumeration") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    Hypergraph h;
    h.n = 2 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < m; ++j) {
      std::vector<Vertex> e;
      for (Vertex x = 0; x < h.n; ++x)
        if (rng() % 3 == 0) e.push_back(x);
      if (e.size() < 2) e = {0, 1};
      h.edges.push_back(e);
    }
    // recursive colouring with early edge checks
    std::vector<int> colour(static_cast<std::size_t>(h.n), -1);
    auto fine = [&]() {
      for (const auto& e : h.edges) {
        bool z = false, o = false, open = false;
        for (Vertex x : e) {
          const int c = colour[static_cast<std::size_t>(x)];
          if (c < 0) open = true;
          else (c ? o : z) = true;
        }
        if (!open && !(z && o)) return false;
      }
      return true;
    };
    auto go = [&](auto& self, int x) -> bool {
      if (!fine()) return false;
      if (x == h.n) return true;
      for (int c = 0; c < 2; ++c) {
        colour[static_cast<std::size_t>(x)] = c;
        if (self(self, x + 1)) return true;
      }
      colour[static_cast<std::size_t>(x)] = -1;
      return false;
    };
    const auto got = hypergraph_2color(h);
    CHECK(got.has_value() == go(go, 0));
    if (got) {
      for (const auto& e : h.edges) {
        bool z = false, o = false;
        for (Vertex x : e) ((*got)[static_cast<std::size_t>(x)] ? o : z) = true;
        CHECK((z && o));
      }
    }
  }
}

TEST_CASE("eulerian kappa reduction") {
  // s1=0 <-> t1=1, s2=2 <-> t2=3
  const Digraph twin = Digraph::build(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(two_linkage_directed(twin, 0, 1, 2, 3).has_value());
  const auto yes = eulerian_kappa_reduce(twin, 0, 1, 2, 3, 3, 2);
  CHECK(is_eulerian(yes.instance.graph()));
  CHECK(yes.instance.k() == 3);
  CHECK(max_packing(yes.instance, Disjointness::kInternal).value >= 2);

  // single cycle s1 t2 s2 t1
  const Digraph cyc = Digraph::build(4, {{0, 3}, {3, 2}, {2, 1}, {1, 0}});
  CHECK_FALSE(two_linkage_directed(cyc, 0, 1, 2, 3).has_value());
  const auto no = eulerian_kappa_reduce(cyc, 0, 1, 2, 3, 3, 2);
  CHECK(is_eulerian(no.instance.graph()));
  CHECK(max_packing(no.instance, Disjointness::kInternal).value < 2);

  const auto larger = eulerian_kappa_reduce(twin, 0, 1, 2, 3, 4, 3);
  CHECK(is_eulerian(larger.instance.graph()));
  CHECK(larger.instance.k() == 4);
  CHECK(meets(larger));

  for (int k = 4; k <= 5; ++k) {
    const auto chained = eulerian_kappa_reduce(cyc, 0, 1, 2, 3, k, 2);
    CHECK(is_eulerian(chained.instance.graph()));
    CHECK(max_packing(chained.instance, Disjointness::kInternal).value < 2);
  }

  CHECK_THROWS_AS(eulerian_kappa_reduce(directed_path(4), 0, 1, 2, 3, 3, 2), InputError);
  CHECK_THROWS_AS(eulerian_kappa_reduce(twin, 0, 1, 1, 3, 3, 2), InputError);
  const Digraph stray = Digraph::build(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}});
  CHECK_THROWS_AS(eulerian_kappa_reduce(stray, 0, 1, 2, 3, 3, 2), InputError);
}

// With u_3 joined to u_1 and u_2 by 2-cycles, u_2 -> u_3 -> u_1 is a detour
// around the linkage gadget: two trees exist even though cyc has no linkage.
TEST_CASE("2-cycle wiring of extra terminals short-circuits the linkage") {
  const Digraph cyc = Digraph::build(4, {{0, 3}, {3, 2}, {2, 1}, {1, 0}});
  const Vertex r = 4, u1 = 5, u2 = 6, u3 = 7;
  std::vector<Arc> arcs = cyc.arcs();
  for (Arc a : std::vector<Arc>{{r, 0}, {r, 2}, {1, u1}, {u1, 1}, {3, u2}, {u2, 3}, {0, u2}, {2, u1},
                                {u1, r}, {u2, r}, {u1, u3}, {u3, u1}, {u2, u3}, {u3, u2}}) {
    arcs.push_back(a);
  }
  const auto inst = SteinerInstance::create(Digraph::build(8, arcs), {r, u1, u2, u3}, r);
  CHECK(is_eulerian(inst.graph()));
  CHECK(max_packing(inst, Disjointness::kInternal).value >= 2);
  CHECK_FALSE(meets(eulerian_kappa_reduce(cyc, 0, 1, 2, 3, 4, 2)));
}

TEST_CASE("reduction outputs are simple and labelled") {
  const auto k3 = SteinerInstance::create(complete_symmetric(3), {0, 1, 2}, 0);
  const auto outs = {amplify_3_2(k3, 5, 4), cllm_reduce(TripartiteInstance{2, {{0, 2}, {2, 4}}}, 4),
                     hypergraph_reduce(Hypergraph{3, {{0, 1, 2}, {1, 2}}}, 3),
                     eulerian_kappa_reduce(Digraph::build(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}}), 0, 1, 2, 3, 5, 4)};
  for (const auto& o : outs) {
    CHECK(o.instance.graph().is_simple());
    CHECK(static_cast<int>(o.labels.size()) == o.instance.graph().order());
    std::set<std::string> distinct(o.labels.begin(), o.labels.end());
    CHECK(distinct.size() == o.labels.size());
  }
}
