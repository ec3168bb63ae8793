#include "treeconn/packing_fast.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "treeconn/connectivity.hpp"
#include "treeconn/errors.hpp"
#include "treeconn/packing_exact.hpp"
#include "tree_enum.hpp"

namespace treeconn {

int eulerian_lambda(const SteinerInstance& inst) {
  if (!is_eulerian(inst.graph())) throw InputError("eulerian engine needs an Eulerian digraph");
  int best = -1;
  for (Vertex s : inst.sinks()) {
    const int value = detail::lambda_value(inst.graph(), inst.root(), s);
    if (best < 0 || value < best) best = value;
    if (best == 0) break;
  }
  return best;
}

std::vector<ArcId> terminal_arcs(const SteinerInstance& inst) {
  std::vector<ArcId> result;
  const Digraph& d = inst.graph();
  for (ArcId id = 0; id < static_cast<ArcId>(d.size()); ++id) {
    const Arc& a = d.arc(id);
    if (inst.is_terminal(a.tail) && inst.is_terminal(a.head)) result.push_back(id);
  }
  return result;
}

std::optional<std::string> skeleton_violation(const SteinerInstance& inst, const Skeleton& skeleton) {
  const Digraph& d = inst.graph();
  const int k = inst.k();
  if (static_cast<int>(skeleton.vertices.size()) > 2 * k - 2 && k > 1) return "more than 2k-2 vertices";
  if (!std::is_sorted(skeleton.vertices.begin(), skeleton.vertices.end())) return "vertices not ascending";
  auto in_skeleton = [&](Vertex v) {
    return std::binary_search(skeleton.vertices.begin(), skeleton.vertices.end(), v);
  };
  for (Vertex s : inst.terminals()) {
    if (!in_skeleton(s)) return "terminal " + std::to_string(s) + " missing";
  }
  for (Vertex b : skeleton.branch) {
    if (inst.is_terminal(b)) return "branch vertex " + std::to_string(b) + " is a terminal";
    if (!in_skeleton(b)) return "branch vertex " + std::to_string(b) + " missing from vertices";
  }
  if (skeleton.vertices.size() != inst.terminals().size() + skeleton.branch.size()) {
    return "vertices other than S and the branch vertices";
  }
  if (skeleton.arcs.size() + 1 != skeleton.vertices.size()) return "arc count is not |vertices|-1";
  std::map<Vertex, int> in_deg;
  std::map<Vertex, int> out_deg;
  std::map<Vertex, Vertex> parent;
  for (const SkeletonArc& a : skeleton.arcs) {
    if (!in_skeleton(a.tail) || !in_skeleton(a.head)) return "arc leaves the skeleton";
    if (a.direct && !(inst.is_terminal(a.tail) && inst.is_terminal(a.head) && d.has_arc(a.tail, a.head))) {
      return "direct arc is not an arc of D[S]";
    }
    ++out_deg[a.tail];
    if (++in_deg[a.head] > 1) return "vertex " + std::to_string(a.head) + " has two parents";
    parent[a.head] = a.tail;
  }
  if (in_deg.count(inst.root()) != 0) return "arc into the root";
  for (Vertex v : skeleton.vertices) {
    if (v == inst.root()) continue;
    Vertex x = v;
    for (std::size_t steps = 0; x != inst.root(); ++steps) {
      if (steps > skeleton.vertices.size()) return "cycle through " + std::to_string(v);
      x = parent.at(x);
    }
  }
  for (Vertex v : skeleton.vertices) {
    if (out_deg[v] == 0 && !inst.is_terminal(v)) return "leaf " + std::to_string(v) + " outside S";
    if (!inst.is_terminal(v) && out_deg[v] + in_deg[v] < 3) {
      return "branch vertex " + std::to_string(v) + " has degree below 3";
    }
  }
  return std::nullopt;
}

std::optional<std::string> partition_violation(const SteinerInstance& inst, const ArcPartition& partition) {
  const std::vector<ArcId> expected = terminal_arcs(inst);
  std::vector<ArcId> seen;
  for (const auto& part : partition.parts) seen.insert(seen.end(), part.begin(), part.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return "an arc lies in two parts";
  if (seen != expected) return "parts do not cover exactly the arcs of D[S]";
  return std::nullopt;
}

namespace {

using detail::vertex_bit;
using detail::VertexSet;
using Pair = std::pair<Vertex, Vertex>;

struct Candidate {
  std::vector<Vertex> branch;
  VertexSet branch_set = 0;
  std::vector<SkeletonArc> arcs;
  std::uint64_t direct = 0;     // bit j: terminal arc j realised directly
  std::vector<Pair> requests;   // skeleton arcs realised as paths, (tail, head)
  int need = 0;                 // lower bound on vertices outside S consumed
  std::vector<int> ports;       // per terminal index: requests ending there
};

class SymmetricEngine {
 public:
  SymmetricEngine(const SteinerInstance& inst, const SymmetricBudget& budget)
      : inst_(inst), d_(inst.graph()), budget_(budget) {
    if (!is_symmetric(d_)) throw InputError("symmetric engine needs a symmetric digraph");
    if (d_.order() > detail::kMaxSetVertices) throw BudgetExceeded("symmetric engine supports at most 64 vertices");
    tarcs_ = terminal_arcs(inst_);
    if (tarcs_.size() > 64) throw BudgetExceeded("too many arcs inside S for the symmetric engine");
    std::vector<bool> keep(d_.size(), true);
    for (ArcId id : tarcs_) keep[static_cast<std::size_t>(id)] = false;
    outside_ = spanning_subgraph(d_, keep);
    for (Vertex v = 0; v < d_.order(); ++v) {
      if (!inst_.is_terminal(v)) free_.push_back(v);
    }
    const auto& terms = inst_.terminals();
    term_index_.assign(static_cast<std::size_t>(d_.order()), -1);
    for (std::size_t i = 0; i < terms.size(); ++i) term_index_[static_cast<std::size_t>(terms[i])] = static_cast<int>(i);
    root_index_ = term_index_[static_cast<std::size_t>(inst_.root())];
    for (Vertex s : terms) {
      int cap = 0;
      for (ArcId id : d_.out_arcs(s)) {
        if (!inst_.is_terminal(d_.arc(id).head)) ++cap;
      }
      port_cap_.push_back(cap);
    }
    direct_in_.assign(terms.size(), 0);
    direct_out_.assign(terms.size(), 0);
    for (std::size_t j = 0; j < tarcs_.size(); ++j) {
      const Arc& a = d_.arc(tarcs_[j]);
      direct_out_[static_cast<std::size_t>(term_index_[static_cast<std::size_t>(a.tail)])] |= std::uint64_t{1} << j;
      direct_in_[static_cast<std::size_t>(term_index_[static_cast<std::size_t>(a.head)])] |= std::uint64_t{1} << j;
    }
    generate();
  }

  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<ArcId>& tarcs() const { return tarcs_; }

  // pools[i] lists candidate indices allowed as tree i; with ordered == true
  // the choice indices must be non-decreasing (all pools identical).
  std::optional<TreePacking> search(int l, std::vector<std::vector<int>> pools, bool ordered) {
    l_ = l;
    pools_ = std::move(pools);
    ordered_ = ordered;
    branch_used_ = 0;
    direct_used_ = 0;
    need_used_ = 0;
    ports_used_.assign(inst_.terminals().size(), 0);
    requests_.clear();
    chosen_.clear();
    if (!descend(0, 0)) return std::nullopt;
    return build_packing();
  }

 private:
  void generate() {
    const int k = inst_.k();
    const int max_branch = std::min<int>(std::max(k - 2, 0), static_cast<int>(free_.size()));
    // Rough work estimate before enumerating parent functions.
    double work = 0;
    for (int b = 0; b <= max_branch; ++b) {
      const int m = k + b;
      work += std::exp(std::lgamma(free_.size() + 1.0) - std::lgamma(b + 1.0) -
                       std::lgamma(free_.size() - b + 1.0)) *
              std::pow(static_cast<double>(m), m - 1);
    }
    if (work > 64.0 * static_cast<double>(budget_.max_skeletons)) {
      throw BudgetExceeded("skeleton enumeration exceeds the budget");
    }
    std::vector<Vertex> chosen;
    for (int b = 0; b <= max_branch; ++b) choose_branch(0, b, chosen);
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [](const Candidate& x, const Candidate& y) { return x.need < y.need; });
  }

  void choose_branch(std::size_t from, int left, std::vector<Vertex>& chosen) {
    if (left == 0) {
      shapes_for(chosen);
      return;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= free_.size(); ++i) {
      chosen.push_back(free_[i]);
      choose_branch(i + 1, left - 1, chosen);
      chosen.pop_back();
    }
  }

  void shapes_for(const std::vector<Vertex>& branch) {
    std::vector<Vertex> nodes = inst_.terminals();
    nodes.insert(nodes.end(), branch.begin(), branch.end());
    std::sort(nodes.begin(), nodes.end());
    const int m = static_cast<int>(nodes.size());
    int root = 0;
    while (nodes[static_cast<std::size_t>(root)] != inst_.root()) ++root;
    std::vector<int> others;
    for (int i = 0; i < m; ++i) {
      if (i != root) others.push_back(i);
    }
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    std::vector<int> digit(others.size(), 0);
    if (others.empty()) return;
    while (true) {
      bool valid = true;
      for (std::size_t j = 0; j < others.size(); ++j) {
        int p = digit[j];
        if (p >= others[j]) ++p;  // skip self
        parent[static_cast<std::size_t>(others[j])] = p;
      }
      valid = is_arborescence(parent, root, m);
      if (valid) {
        std::vector<int> children(static_cast<std::size_t>(m), 0);
        for (int v : others) ++children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        for (int i = 0; i < m && valid; ++i) {
          const Vertex v = nodes[static_cast<std::size_t>(i)];
          if (!inst_.is_terminal(v) && children[static_cast<std::size_t>(i)] < 2) valid = false;
        }
      }
      if (valid) emit_shape(nodes, parent, root, branch);
      std::size_t j = 0;
      while (j < digit.size() && ++digit[j] == m - 1) digit[j++] = 0;
      if (j == digit.size()) break;
    }
  }

  static bool is_arborescence(const std::vector<int>& parent, int root, int m) {
    for (int v = 0; v < m; ++v) {
      int x = v;
      for (int steps = 0; x != root; ++steps) {
        if (steps >= m) return false;
        x = parent[static_cast<std::size_t>(x)];
      }
    }
    return true;
  }

  void emit_shape(const std::vector<Vertex>& nodes, const std::vector<int>& parent, int root,
                  const std::vector<Vertex>& branch) {
    std::vector<Pair> tree_arcs;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      if (i == root) continue;
      tree_arcs.emplace_back(nodes[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])],
                             nodes[static_cast<std::size_t>(i)]);
    }
    // Skeleton arcs that may be realised by the arc itself.
    std::vector<std::size_t> optional_direct;
    std::vector<int> optional_bit;
    for (std::size_t j = 0; j < tree_arcs.size(); ++j) {
      const auto [u, v] = tree_arcs[j];
      if (!inst_.is_terminal(u) || !inst_.is_terminal(v)) continue;
      const auto id = d_.find_arc(u, v);
      if (!id) continue;
      optional_direct.push_back(j);
      optional_bit.push_back(static_cast<int>(std::lower_bound(tarcs_.begin(), tarcs_.end(), *id) - tarcs_.begin()));
    }
    const std::uint64_t combos = std::uint64_t{1} << optional_direct.size();
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      Candidate c;
      c.branch = branch;
      for (Vertex b : branch) c.branch_set |= vertex_bit(b);
      c.ports.assign(inst_.terminals().size(), 0);
      c.need = static_cast<int>(branch.size());
      std::vector<bool> is_direct(tree_arcs.size(), false);
      for (std::size_t t = 0; t < optional_direct.size(); ++t) {
        if ((mask >> t) & 1U) {
          is_direct[optional_direct[t]] = true;
          c.direct |= std::uint64_t{1} << optional_bit[t];
        }
      }
      for (std::size_t j = 0; j < tree_arcs.size(); ++j) {
        const auto [u, v] = tree_arcs[j];
        c.arcs.push_back(SkeletonArc{u, v, static_cast<bool>(is_direct[j])});
        if (is_direct[j]) continue;
        c.requests.emplace_back(u, v);
        if (!outside_.has_arc(u, v)) ++c.need;
        for (Vertex x : {u, v}) {
          const int t = term_index_[static_cast<std::size_t>(x)];
          if (t >= 0) ++c.ports[static_cast<std::size_t>(t)];
        }
      }
      if (c.need > static_cast<int>(free_.size())) continue;
      bool ports_ok = true;
      for (std::size_t t = 0; t < c.ports.size(); ++t) {
        if (c.ports[t] > port_cap_[t]) ports_ok = false;
      }
      if (!ports_ok) continue;
      if (!linkable(c.requests)) continue;
      candidates_.push_back(std::move(c));
      if (candidates_.size() > budget_.max_skeletons) {
        throw BudgetExceeded("more candidate skeletons than the budget allows");
      }
    }
  }

  bool linkable(const std::vector<Pair>& requests) {
    std::vector<Pair> key;
    key.reserve(requests.size());
    for (auto [u, v] : requests) key.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(key.begin(), key.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const bool ok = disjoint_paths_undirected(outside_, key, inst_.terminals()).has_value();
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  bool descend(int i, std::size_t start) {
    if (i == l_) return true;
    const int remaining = l_ - i;
    for (std::size_t t = 0; t < port_cap_.size(); ++t) {
      const std::uint64_t direct = static_cast<int>(t) == root_index_ ? direct_out_[t] : direct_in_[t];
      const int available = port_cap_[t] - ports_used_[t] + std::popcount(direct & ~direct_used_);
      if (available < remaining) return false;
    }
    const auto& pool = pools_[static_cast<std::size_t>(i)];
    for (std::size_t p = start; p < pool.size(); ++p) {
      const Candidate& c = candidates_[static_cast<std::size_t>(pool[p])];
      if ((c.branch_set & branch_used_) != 0 || (c.direct & direct_used_) != 0) continue;
      if (need_used_ + c.need > static_cast<int>(free_.size())) continue;
      bool ports_ok = true;
      for (std::size_t t = 0; t < c.ports.size(); ++t) {
        if (ports_used_[t] + c.ports[t] > port_cap_[t]) ports_ok = false;
      }
      if (!ports_ok) continue;
      const std::size_t before = requests_.size();
      requests_.insert(requests_.end(), c.requests.begin(), c.requests.end());
      if (i == 0 || linkable(requests_)) {
        branch_used_ |= c.branch_set;
        direct_used_ |= c.direct;
        need_used_ += c.need;
        for (std::size_t t = 0; t < c.ports.size(); ++t) ports_used_[t] += c.ports[t];
        chosen_.push_back(pool[p]);
        if (descend(i + 1, ordered_ ? p : 0)) return true;
        chosen_.pop_back();
        for (std::size_t t = 0; t < c.ports.size(); ++t) ports_used_[t] -= c.ports[t];
        need_used_ -= c.need;
        direct_used_ &= ~c.direct;
        branch_used_ &= ~c.branch_set;
      }
      requests_.resize(before);
    }
    return false;
  }

  TreePacking build_packing() const {
    std::vector<Pair> all;
    for (int idx : chosen_) {
      const auto& reqs = candidates_[static_cast<std::size_t>(idx)].requests;
      all.insert(all.end(), reqs.begin(), reqs.end());
    }
    auto paths = disjoint_paths_undirected(outside_, all, inst_.terminals());
    if (!paths) throw std::logic_error("skeleton paths vanished between checks");
    TreePacking packing;
    packing.mode = Disjointness::kInternal;
    std::size_t next = 0;
    for (int idx : chosen_) {
      std::vector<Arc> pairs;
      for (const SkeletonArc& a : candidates_[static_cast<std::size_t>(idx)].arcs) {
        if (a.direct) {
          pairs.push_back(Arc{a.tail, a.head});
          continue;
        }
        const auto& path = (*paths)[next++];
        for (std::size_t j = 0; j + 1 < path.size(); ++j) pairs.push_back(Arc{path[j], path[j + 1]});
      }
      packing.trees.push_back(tree_from_pairs(d_, inst_.root(), pairs));
    }
    if (auto why = packing_violation(inst_, packing)) {
      throw std::logic_error("symmetric engine built an invalid packing: " + *why);
    }
    return packing;
  }

  const SteinerInstance& inst_;
  const Digraph& d_;
  SymmetricBudget budget_;
  std::vector<ArcId> tarcs_;
  Digraph outside_;
  std::vector<Vertex> free_;
  std::vector<int> term_index_;
  int root_index_ = 0;
  std::vector<int> port_cap_;
  std::vector<std::uint64_t> direct_in_;
  std::vector<std::uint64_t> direct_out_;
  std::vector<Candidate> candidates_;
  std::map<std::vector<Pair>, bool> memo_;

  int l_ = 0;
  std::vector<std::vector<int>> pools_;
  bool ordered_ = false;
  VertexSet branch_used_ = 0;
  std::uint64_t direct_used_ = 0;
  int need_used_ = 0;
  std::vector<int> ports_used_;
  std::vector<Pair> requests_;
  std::vector<int> chosen_;
};

void check_partition_budget(const SteinerInstance& inst, int l, const SymmetricBudget& budget) {
  const double count = std::pow(static_cast<double>(l + 1), static_cast<double>(terminal_arcs(inst).size()));
  if (count > budget.max_partitions) throw BudgetExceeded("too many arc partitions of D[S]");
}

}  // namespace

std::vector<Skeleton> candidate_skeletons(const SteinerInstance& inst, const SymmetricBudget& budget) {
  SymmetricEngine engine(inst, budget);
  std::vector<Skeleton> result;
  for (const Candidate& c : engine.candidates()) {
    Skeleton s;
    s.vertices = inst.terminals();
    s.vertices.insert(s.vertices.end(), c.branch.begin(), c.branch.end());
    std::sort(s.vertices.begin(), s.vertices.end());
    s.branch = c.branch;
    s.arcs = c.arcs;
    result.push_back(std::move(s));
  }
  return result;
}

std::optional<TreePacking> symmetric_kappa_decide(const SteinerInstance& inst, int l, const SymmetricBudget& budget) {
  if (l < 1) throw InputError("threshold l must be at least 1");
  if (!is_symmetric(inst.graph())) throw InputError("symmetric engine needs a symmetric digraph");
  check_partition_budget(inst, l, budget);
  SymmetricEngine engine(inst, budget);
  std::vector<int> all(engine.candidates().size());
  std::iota(all.begin(), all.end(), 0);
  return engine.search(l, std::vector<std::vector<int>>(static_cast<std::size_t>(l), all), true);
}

std::optional<TreePacking> skeleton_search(const SteinerInstance& inst, int l, const ArcPartition& partition,
                                           const SymmetricBudget& budget) {
  if (l < 1) throw InputError("threshold l must be at least 1");
  if (partition.parts.size() != static_cast<std::size_t>(l) + 1) throw InputError("partition needs l+1 parts");
  if (auto why = partition_violation(inst, partition)) throw InputError("bad partition: " + *why);
  SymmetricEngine engine(inst, budget);
  const auto& tarcs = engine.tarcs();
  std::vector<std::vector<int>> pools(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    std::uint64_t mask = 0;
    for (ArcId id : partition.parts[static_cast<std::size_t>(i)]) {
      mask |= std::uint64_t{1} << (std::lower_bound(tarcs.begin(), tarcs.end(), id) - tarcs.begin());
    }
    for (std::size_t c = 0; c < engine.candidates().size(); ++c) {
      if (engine.candidates()[c].direct == mask) pools[static_cast<std::size_t>(i - 1)].push_back(static_cast<int>(c));
    }
  }
  return engine.search(l, std::move(pools), false);
}

void for_each_arc_partition(const SteinerInstance& inst, int l,
                            const std::function<bool(const ArcPartition&)>& visit) {
  if (l < 1) throw InputError("threshold l must be at least 1");
  const std::vector<ArcId> tarcs = terminal_arcs(inst);
  const Digraph& d = inst.graph();
  const std::size_t parts = static_cast<std::size_t>(l) + 1;
  // parent[p][v]: tail of the arc of part p entering v, or -1.
  std::vector<std::vector<Vertex>> parent(parts, std::vector<Vertex>(static_cast<std::size_t>(d.order()), -1));
  ArcPartition current;
  current.parts.resize(parts);

  auto acyclic = [&](std::size_t p, Vertex head) {
    // Adding tail->head closes a cycle iff head is an ancestor of tail.
    for (Vertex x = d.arc(current.parts[p].back()).tail; x != -1; x = parent[p][static_cast<std::size_t>(x)]) {
      if (x == head) return false;
    }
    return true;
  };
  auto place = [&](auto& self, std::size_t j) -> bool {
    if (j == tarcs.size()) return visit(current);
    const Arc& a = d.arc(tarcs[j]);
    for (std::size_t p = 0; p < parts; ++p) {
      if (p > 0 && (a.head == inst.root() || parent[p][static_cast<std::size_t>(a.head)] != -1)) continue;
      current.parts[p].push_back(tarcs[j]);
      if (p > 0 && !acyclic(p, a.head)) {
        current.parts[p].pop_back();
        continue;
      }
      if (p > 0) parent[p][static_cast<std::size_t>(a.head)] = a.tail;
      const bool go_on = self(self, j + 1);
      if (p > 0) parent[p][static_cast<std::size_t>(a.head)] = -1;
      current.parts[p].pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  place(place, 0);
}

}  // namespace treeconn
