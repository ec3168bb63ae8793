#include "doctest.h"

#include "treeconn/connectivity.hpp"
#include "treeconn/errors.hpp"
#include "treeconn/families.hpp"
#include "treeconn/packing_exact.hpp"
#include "treeconn/packing_fast.hpp"

using namespace treeconn;

TEST_CASE("complete packing") {
  const auto inst = SteinerInstance::create(complete_symmetric(4), {0, 1, 2}, 1);
  const auto p = complete_packing(4, {0, 1, 2}, 1);
  CHECK(p.trees.size() == 3);
  CHECK(is_valid_packing(inst, p));

  const auto all = complete_packing(5, {0, 1, 2, 3, 4}, 0);
  CHECK(all.trees.size() == 4);
  for (const auto& t : all.trees) CHECK(t.arcs.size() == 4);

  const auto pairs = complete_packing(5, {1, 3}, 3);
  CHECK(pairs.trees.size() == 4);
  CHECK(kappa_local(complete_symmetric(5), 3, 1).value == 4);
  CHECK(is_valid_packing(SteinerInstance::create(complete_symmetric(5), {1, 3}, 3), pairs));

  CHECK_THROWS_AS(complete_packing(4, {0, 1}, 2), InputError);
  CHECK_THROWS_AS(complete_packing(4, {0, 7}, 0), InputError);
}

TEST_CASE("property: complete packing matches the oracle") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const auto& rs : rooted_sets(n, k)) {
        const auto inst = SteinerInstance::create(complete_symmetric(n), rs.terminals, rs.root);
        const auto p = complete_packing(n, rs.terminals, rs.root);
        CHECK(static_cast<int>(p.trees.size()) == n - 1);
        CHECK(is_valid_packing(inst, p));
      }
      const auto rs = rooted_sets(n, k).back();
      const auto inst = SteinerInstance::create(complete_symmetric(n), rs.terminals, rs.root);
      CHECK(max_packing(inst, Disjointness::kInternal).value == n - 1);
    }
  }
}

TEST_CASE("glued cliques") {
  const auto g = glued_cliques(4);
  CHECK(g.graph.order() == 7);
  CHECK(g.cut_vertex == 3);
  CHECK(g.graph.size() == 24);
  CHECK(global_kappa(g.graph) == 1);
  CHECK(lambda_local(g.graph, 0, 6).value == 3);
  CHECK(kappa_local(g.graph, 0, 6).value == 1);
  CHECK(global_tree_connectivity(g.graph, 3, Disjointness::kInternal).value == 1);
  CHECK(global_tree_connectivity(g.graph, 7, Disjointness::kInternal).value >= 2);
  CHECK_THROWS_AS(glued_cliques(3), InputError);
}

TEST_CASE("glued cliques: terminals avoiding the cut vertex") {
  const auto g = glued_cliques(4);
  const auto inst = SteinerInstance::create(g.graph, {0, 1, 5}, 0);
  CHECK(max_packing(inst, Disjointness::kInternal).value == 1);
}

TEST_CASE("join family") {
  const Digraph d = join_family(2, 6);
  CHECK(is_symmetric(d));
  CHECK(global_kappa(d) == 2);
  CHECK(global_lambda(d) == 2);
  for (Vertex u = 2; u < 6; ++u) CHECK(d.out_degree(u) == 2);
  CHECK(global_tree_connectivity(d, 2, Disjointness::kInternal).value == 2);
  CHECK_THROWS_AS(join_family(3, 8), InputError);
}

TEST_CASE("bipartite Hamiltonian decomposition") {
  for (int a = 2; a <= 6; ++a) {
    const auto cycles = ham_decompose_bipartite(a);
    const auto why = ham_decomposition_violation(a, cycles);
    CHECK_MESSAGE(!why.has_value(), *why);
    std::vector<Vertex> expected_last;
    for (int i = 0; i < a; ++i) {
      expected_last.push_back(i);
      expected_last.push_back(a + i);
    }
    CHECK(cycles.back() == expected_last);
  }
  const auto two = ham_decompose_bipartite(2);
  CHECK(two.size() == 2);
  CHECK(two[0].size() == 4);
  auto broken = ham_decompose_bipartite(3);
  std::swap(broken[0][1], broken[0][3]);
  broken[1] = broken[0];
  CHECK(ham_decomposition_violation(3, broken).has_value());
  CHECK_THROWS_AS(ham_decompose_bipartite(1), InputError);
}

TEST_CASE("Nordhaus-Gaddum pairs") {
  for (int a = 2; a <= 4; ++a) {
    const auto p = nordhaus_gaddum_pair(a);
    CHECK(p.graph.order() == 2 * a);
    CHECK(p.graph.min_out_degree() == a - 1);
    CHECK(p.graph.min_in_degree() == a - 1);
    std::vector<Vertex> all;
    for (Vertex v = 0; v < 2 * a; ++v) all.push_back(v);
    const auto inst = SteinerInstance::create(p.complement, all, p.root);
    CHECK(static_cast<int>(p.certificate.trees.size()) == a);
    const auto why = packing_violation(inst, p.certificate);
    CHECK_MESSAGE(!why.has_value(), *why);
  }
  const auto two = nordhaus_gaddum_pair(2);
  CHECK(global_tree_connectivity(two.graph, 2, Disjointness::kArc).value == 1);
  CHECK(global_tree_connectivity(two.complement, 2, Disjointness::kArc).value == 2);

  // two arc-disjoint Hamiltonian cycles of <->K_{3,3}
  const auto three = nordhaus_gaddum_pair(3);
  CHECK(is_eulerian(three.graph));
  CHECK(eulerian_lambda(SteinerInstance::create(three.graph, {0, 1, 3, 4}, 0)) == 2);
}
