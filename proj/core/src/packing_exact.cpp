#include "treeconn/packing_exact.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tree_enum.hpp"
#include "treeconn/errors.hpp"

namespace treeconn {

using detail::ArcSet;
using detail::VertexSet;
using detail::vertex_bit;

namespace {

// A minimal tree prepared for conflict tests. Trees conflict when they share an
// arc, or (internal mode) a non-terminal vertex.
struct Candidate {
  ArcSet arcs;
  VertexSet inner = 0;
  std::vector<ArcId> ids;
  std::vector<ArcId> sink_entry;  // arc entering each sink, aligned with inst.sinks()
  std::vector<ArcId> root_exits;
};

Candidate make_candidate(const SteinerInstance& inst, const std::vector<ArcId>& ids, VertexSet vertices) {
  const Digraph& g = inst.graph();
  Candidate c;
  c.ids = ids;
  std::sort(c.ids.begin(), c.ids.end());
  for (ArcId id : c.ids) c.arcs.set(static_cast<std::size_t>(id));
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((vertices & vertex_bit(v)) != 0 && !inst.is_terminal(v)) c.inner |= vertex_bit(v);
  }
  const auto sinks = inst.sinks();
  c.sink_entry.assign(sinks.size(), -1);
  for (ArcId id : c.ids) {
    const Arc& a = g.arc(id);
    if (a.tail == inst.root()) c.root_exits.push_back(id);
    const auto it = std::lower_bound(sinks.begin(), sinks.end(), a.head);
    if (it != sinks.end() && *it == a.head) c.sink_entry[static_cast<std::size_t>(it - sinks.begin())] = id;
  }
  return c;
}

bool compatible(const Candidate& a, const Candidate& b, Disjointness mode) {
  if ((a.arcs & b.arcs).any()) return false;
  return mode == Disjointness::kArc || (a.inner & b.inner) == 0;
}

// Maximum set of pairwise compatible candidates by branch and bound. The bound
// for a candidate list is a clique cover: trees entering a sink by the same arc
// (or leaving the root by the same arc) pairwise conflict.
class ConflictSearch {
 public:
  ConflictSearch(const std::vector<Candidate>& cands, Disjointness mode, std::size_t sink_count,
                 int target)
      : cands_(cands), mode_(mode), sink_count_(sink_count), target_(target) {}

  std::vector<int> run() {
    std::vector<int> all(cands_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> chosen;
    expand(all, chosen);
    return best_;
  }

 private:
  std::vector<int> suffix_bounds(const std::vector<int>& pool) const {
    std::vector<int> bound(pool.size() + 1, 0);
    std::vector<ArcSet> seen(sink_count_ + 1);
    std::vector<int> distinct(sink_count_ + 1, 0);
    for (std::size_t i = pool.size(); i-- > 0;) {
      const Candidate& c = cands_[static_cast<std::size_t>(pool[i])];
      for (std::size_t s = 0; s < sink_count_; ++s) {
        const auto id = static_cast<std::size_t>(c.sink_entry[s]);
        if (!seen[s][id]) {
          seen[s].set(id);
          ++distinct[s];
        }
      }
      for (ArcId id : c.root_exits) {
        if (!seen[sink_count_][static_cast<std::size_t>(id)]) {
          seen[sink_count_].set(static_cast<std::size_t>(id));
          ++distinct[sink_count_];
        }
      }
      bound[i] = *std::min_element(distinct.begin(), distinct.end());
    }
    return bound;
  }

  void expand(const std::vector<int>& pool, std::vector<int>& chosen) {
    if (chosen.size() > best_.size()) best_ = chosen;
    if (static_cast<int>(best_.size()) >= target_ || pool.empty()) return;
    const auto bound = suffix_bounds(pool);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (chosen.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const Candidate& pick = cands_[static_cast<std::size_t>(pool[i])];
      std::vector<int> rest;
      rest.reserve(pool.size() - i);
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (compatible(pick, cands_[static_cast<std::size_t>(pool[j])], mode_)) rest.push_back(pool[j]);
      }
      chosen.push_back(pool[i]);
      expand(rest, chosen);
      chosen.pop_back();
      if (static_cast<int>(best_.size()) >= target_) return;
    }
  }

  const std::vector<Candidate>& cands_;
  Disjointness mode_;
  std::size_t sink_count_;
  int target_;
  std::vector<int> best_;
};

// Builds the residual digraph (allowed arcs, blocked vertices removed) and
// returns min over sinks of lambda(r, s).
int residual_flow_bound(const SteinerInstance& inst, const ArcSet& allowed, VertexSet blocked) {
  const Digraph& g = inst.graph();
  std::vector<bool> keep(g.size(), false);
  for (std::size_t id = 0; id < g.size(); ++id) {
    const Arc& a = g.arcs()[id];
    keep[id] = allowed[id] && (blocked & (vertex_bit(a.tail) | vertex_bit(a.head))) == 0;
  }
  const Digraph residual = spanning_subgraph(g, keep);
  int bound = std::numeric_limits<int>::max();
  for (Vertex s : inst.sinks()) bound = std::min(bound, detail::lambda_value(residual, inst.root(), s));
  return bound;
}

// Incremental depth-first packing: grow one tree at a time in the residual
// graph. Packings are generated with strictly increasing smallest arc id.
class IncrementalSearch {
 public:
  IncrementalSearch(const SteinerInstance& inst, Disjointness mode, int target)
      : inst_(inst), mode_(mode), target_(target) {}

  std::vector<std::vector<ArcId>> run() {
    grow(detail::all_arcs(inst_.graph()), 0, -1);
    return best_;
  }

 private:
  void grow(const ArcSet& allowed, VertexSet blocked, ArcId last_min) {
    if (current_.size() > best_.size()) best_ = current_;
    if (static_cast<int>(best_.size()) >= target_) return;
    const int bound = residual_flow_bound(inst_, allowed, blocked);
    if (current_.size() + static_cast<std::size_t>(bound) <= best_.size()) return;
    detail::for_each_minimal_tree(inst_, allowed, blocked, [&](const std::vector<ArcId>& ids, VertexSet vs) {
      const ArcId first = *std::min_element(ids.begin(), ids.end());
      if (first <= last_min) return true;
      ArcSet next = allowed;
      for (ArcId id : ids) next.reset(static_cast<std::size_t>(id));
      VertexSet next_blocked = blocked;
      if (mode_ == Disjointness::kInternal) {
        for (Vertex v = 0; v < inst_.graph().order(); ++v) {
          if ((vs & vertex_bit(v)) != 0 && !inst_.is_terminal(v)) next_blocked |= vertex_bit(v);
        }
      }
      current_.push_back(ids);
      grow(next, next_blocked, first);
      current_.pop_back();
      return static_cast<int>(best_.size()) < target_;
    });
  }

  const SteinerInstance& inst_;
  Disjointness mode_;
  int target_;
  std::vector<std::vector<ArcId>> current_;
  std::vector<std::vector<ArcId>> best_;
};

int flow_upper_bound(const SteinerInstance& inst) {
  int bound = std::numeric_limits<int>::max();
  for (Vertex s : inst.sinks()) {
    bound = std::min(bound, detail::lambda_value(inst.graph(), inst.root(), s));
  }
  return bound;
}

TreePacking to_packing(const SteinerInstance& inst, Disjointness mode,
                       std::vector<std::vector<ArcId>> trees) {
  TreePacking packing;
  packing.mode = mode;
  for (auto& ids : trees) {
    std::sort(ids.begin(), ids.end());
    packing.trees.push_back(OutTree{inst.root(), std::move(ids)});
  }
  return packing;
}

// Largest packing of size at most target.
TreePacking search_up_to(const SteinerInstance& inst, Disjointness mode, int target,
                         const ExactBudget& budget) {
  if (target <= 0) return TreePacking{{}, mode};
  std::vector<Candidate> cands;
  bool overflow = false;
  detail::for_each_minimal_tree(inst, detail::all_arcs(inst.graph()), 0,
                                [&](const std::vector<ArcId>& ids, VertexSet vs) {
                                  if (cands.size() >= budget.tree_cap) {
                                    overflow = true;
                                    return false;
                                  }
                                  cands.push_back(make_candidate(inst, ids, vs));
                                  return true;
                                });
  if (overflow) {
    IncrementalSearch dfs(inst, mode, target);
    return to_packing(inst, mode, dfs.run());
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.ids.size() < b.ids.size(); });
  ConflictSearch search(cands, mode, inst.sinks().size(), target);
  std::vector<std::vector<ArcId>> trees;
  for (int i : search.run()) trees.push_back(cands[static_cast<std::size_t>(i)].ids);
  return to_packing(inst, mode, std::move(trees));
}

}  // namespace

void check_budget(const Digraph& d, const ExactBudget& budget) {
  const int n_limit = std::min(budget.max_vertices, kHardMaxVertices);
  const int a_limit = std::min(budget.max_arcs, kHardMaxArcs);
  if (d.order() > n_limit || static_cast<int>(d.size()) > a_limit) {
    throw BudgetExceeded("instance with n=" + std::to_string(d.order()) + ", |A|=" +
                         std::to_string(d.size()) + " exceeds exact budget (n<=" +
                         std::to_string(n_limit) + ", |A|<=" + std::to_string(a_limit) + ")");
  }
}

std::vector<OutTree> enumerate_minimal_trees(const SteinerInstance& inst, std::size_t cap) {
  check_budget(inst.graph(), ExactBudget{kHardMaxVertices, kHardMaxArcs, cap});
  std::vector<OutTree> trees;
  detail::for_each_minimal_tree(inst, detail::all_arcs(inst.graph()), 0,
                                [&](const std::vector<ArcId>& ids, VertexSet) {
                                  if (trees.size() >= cap) {
                                    throw BudgetExceeded("more than " + std::to_string(cap) +
                                                         " minimal trees");
                                  }
                                  OutTree t{inst.root(), ids};
                                  std::sort(t.arcs.begin(), t.arcs.end());
                                  trees.push_back(std::move(t));
                                  return true;
                                });
  return trees;
}

PackingAnswer max_packing(const SteinerInstance& inst, Disjointness mode, const ExactBudget& budget) {
  check_budget(inst.graph(), budget);
  PackingAnswer answer;
  answer.certificate = search_up_to(inst, mode, flow_upper_bound(inst), budget);
  answer.value = static_cast<int>(answer.certificate.trees.size());
  return answer;
}

std::optional<TreePacking> packing_at_least(const SteinerInstance& inst, Disjointness mode, int l,
                                            const ExactBudget& budget) {
  check_budget(inst.graph(), budget);
  if (l <= 0) return TreePacking{{}, mode};
  if (flow_upper_bound(inst) < l) return std::nullopt;
  TreePacking packing = search_up_to(inst, mode, l, budget);
  if (static_cast<int>(packing.trees.size()) < l) return std::nullopt;
  return packing;
}

GlobalAnswer global_tree_connectivity(const Digraph& d, int k, Disjointness mode,
                                      const ExactBudget& budget) {
  const int n = d.order();
  if (k < 2 || k > n) throw InputError("global tree connectivity needs 2 <= k <= n");
  check_budget(d, budget);
  GlobalAnswer answer;
  answer.value = std::numeric_limits<int>::max();
  std::vector<Vertex> set(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) set[static_cast<std::size_t>(i)] = i;
  while (true) {
    for (Vertex r : set) {
      const auto inst = SteinerInstance::create(d, set, r);
      const int cap = answer.value == std::numeric_limits<int>::max()
                          ? flow_upper_bound(inst)
                          : std::min(answer.value, flow_upper_bound(inst));
      const int value = static_cast<int>(search_up_to(inst, mode, cap, budget).trees.size());
      if (value < answer.value) {
        answer.value = value;
        answer.witness_terminals = set;
        answer.witness_root = r;
        if (value == 0) return answer;
      }
    }
    // Next k-subset in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && set[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++set[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      set[static_cast<std::size_t>(j)] = set[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return answer;
}

}  // namespace treeconn
