#include <random>

#include "doctest.h"

#include "treeconn/errors.hpp"
#include "treeconn/packing_exact.hpp"
#include "treeconn/packing_fast.hpp"
#include "treeconn/random_graphs.hpp"

using namespace treeconn;

namespace {

ArcPartition partition_of(const SteinerInstance& inst, const std::vector<std::vector<Arc>>& used) {
  const Digraph& d = inst.graph();
  ArcPartition p;
  p.parts.resize(used.size() + 1);
  std::vector<bool> taken(d.size(), false);
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (const Arc& a : used[i]) {
      const ArcId id = *d.find_arc(a.tail, a.head);
      p.parts[i + 1].push_back(id);
      taken[static_cast<std::size_t>(id)] = true;
    }
  }
  for (ArcId id : terminal_arcs(inst)) {
    if (!taken[static_cast<std::size_t>(id)]) p.parts[0].push_back(id);
  }
  return p;
}

Digraph sym_cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return symmetric_from_edges(n, edges);
}

}  // namespace

TEST_CASE("eulerian lambda examples") {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& rs : rooted_sets(n, 2)) {
      CHECK(eulerian_lambda(SteinerInstance::create(directed_cycle(n), rs.terminals, rs.root)) == 1);
    }
  }
  CHECK(eulerian_lambda(SteinerInstance::create(complete_symmetric(5), {0, 1, 2, 3}, 2)) == 4);
  CHECK_THROWS_AS(eulerian_lambda(SteinerInstance::create(directed_path(3), {0, 2}, 0)), InputError);
}

TEST_CASE("property: eulerian lambda equals the exact arc packing") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Digraph d = random_eulerian(n, 3, rng);
    for (int k = 2; k <= std::min(n, 3); ++k) {
      for (const auto& rs : rooted_sets(n, k)) {
        const auto inst = SteinerInstance::create(d, rs.terminals, rs.root);
        const int fast = eulerian_lambda(inst);
        CHECK(fast == max_packing(inst, Disjointness::kArc).value);
        int local = d.out_degree(rs.root);
        for (Vertex s : inst.sinks()) local = std::min(local, d.in_degree(s));
        CHECK(fast <= local);
      }
    }
  }
}

TEST_CASE("symmetric decision examples") {
  const auto k4 = SteinerInstance::create(complete_symmetric(4), {0, 1, 2}, 0);
  const auto three = symmetric_kappa_decide(k4, 3);
  REQUIRE(three.has_value());
  CHECK(three->trees.size() == 3);
  CHECK(is_valid_packing(k4, *three));
  CHECK_FALSE(symmetric_kappa_decide(k4, 4).has_value());

  const auto c4 = SteinerInstance::create(sym_cycle(4), {0, 1, 2}, 0);
  const auto two = symmetric_kappa_decide(c4, 2);
  REQUIRE(two.has_value());
  CHECK(is_valid_packing(c4, *two));
  CHECK_FALSE(symmetric_kappa_decide(c4, 3).has_value());

  CHECK_THROWS_AS(symmetric_kappa_decide(SteinerInstance::create(directed_cycle(3), {0, 1}, 0), 1), InputError);
  CHECK_THROWS_AS(symmetric_kappa_decide(k4, 0), InputError);
}

TEST_CASE("skeleton search with a fixed partition") {
  // one tree, nothing inside S used: the tree goes around through vertex 3
  const auto c4 = SteinerInstance::create(sym_cycle(4), {0, 1, 2}, 0);
  CHECK(skeleton_search(c4, 1, partition_of(c4, {{{0, 1}, {1, 2}}})).has_value());

  const auto k4 = SteinerInstance::create(complete_symmetric(4), {0, 1, 2, 3}, 0);
  // the out-star of r leaves no arc out of r for a second tree
  CHECK_FALSE(skeleton_search(k4, 2, partition_of(k4, {{{0, 1}, {0, 2}, {0, 3}}, {{1, 2}, {2, 3}}})).has_value());
  const auto found = skeleton_search(k4, 2, partition_of(k4, {{{0, 1}, {1, 2}, {1, 3}}, {{0, 2}, {2, 3}, {3, 1}}}));
  REQUIRE(found.has_value());
  CHECK(is_valid_packing(k4, *found));

  // S = V, and A_1 misses the root: no spare vertex can route the tree
  const auto k3 = SteinerInstance::create(complete_symmetric(3), {0, 1, 2}, 0);
  CHECK_FALSE(skeleton_search(k3, 1, partition_of(k3, {{{1, 2}}})).has_value());

  ArcPartition bad = partition_of(k3, {{{1, 2}}});
  bad.parts[0].pop_back();
  CHECK_THROWS_AS(skeleton_search(k3, 1, bad), InputError);
}

TEST_CASE("candidate skeletons satisfy their invariants") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 30; ++round) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Digraph d = random_symmetric(n, 0.6, rng);
    const auto sets = rooted_sets(n, 3 + static_cast<int>(rng() % 2));
    const auto& pick = sets[rng() % sets.size()];
    const auto inst = SteinerInstance::create(d, pick.terminals, pick.root);
    for (const auto& s : candidate_skeletons(inst)) {
      const auto why = skeleton_violation(inst, s);
      CHECK_MESSAGE(!why.has_value(), *why);
    }
  }
}

TEST_CASE("property: partition-by-partition search agrees with the combined search") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const Digraph d = random_symmetric(n, 0.7, rng);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    const auto sets = rooted_sets(n, k);
    const auto& pick = sets[rng() % sets.size()];
    const auto inst = SteinerInstance::create(d, pick.terminals, pick.root);
    for (int l = 1; l <= 2; ++l) {
      bool any = false;
      for_each_arc_partition(inst, l, [&](const ArcPartition& p) {
        CHECK_FALSE(partition_violation(inst, p).has_value());
        if (auto got = skeleton_search(inst, l, p)) {
          CHECK(is_valid_packing(inst, *got));
          any = true;
        }
        return !any;
      });
      CHECK(any == symmetric_kappa_decide(inst, l).has_value());
    }
  }
}

TEST_CASE("property: symmetric decision agrees with the exact oracle") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Digraph d = random_symmetric(n, 0.6, rng);
    const int k = 2 + static_cast<int>(rng() % std::min(3, n - 1));
    for (const auto& rs : rooted_sets(n, k)) {
      const auto inst = SteinerInstance::create(d, rs.terminals, rs.root);
      const int value = max_packing(inst, Disjointness::kInternal).value;
      for (int l = 1; l <= 3; ++l) {
        const auto got = symmetric_kappa_decide(inst, l);
        CHECK(got.has_value() == (value >= l));
        if (got) CHECK(is_valid_packing(inst, *got));
      }
    }
  }
}
