#include <algorithm>
#include <chrono>

#include "treeconn/errors.hpp"
#include "treeconn/packing_fast.hpp"
#include "treeconn_cli/app.hpp"

namespace treeconn::cli {

namespace {

struct Answer {
  int value = 0;
  std::optional<TreePacking> certificate;
};

// Largest l <= bound that the symmetric engine accepts, with its packing.
Answer symmetric_value(const SteinerInstance& inst) {
  const Digraph& d = inst.graph();
  int bound = d.out_degree(inst.root());
  for (Vertex s : inst.sinks()) bound = std::min(bound, d.in_degree(s));
  Answer answer;
  for (int l = 1; l <= bound; ++l) {
    auto packing = symmetric_kappa_decide(inst, l);
    if (!packing) break;
    answer.value = l;
    answer.certificate = std::move(packing);
  }
  return answer;
}

// The eulerian engine yields a number only; a packing is searched for
// separately and must exist.
std::optional<TreePacking> eulerian_certificate(const SteinerInstance& inst, int value, const ExactBudget& budget) {
  if (value == 0) return TreePacking{{}, Disjointness::kArc};
  try {
    auto packing = packing_at_least(inst, Disjointness::kArc, value, budget);
    if (!packing) throw VerificationFailure("no arc-disjoint packing of the size the eulerian engine reported");
    return packing;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::string resolve_engine(const ComputeRequest& req) {
  const Digraph& d = req.file.graph;
  if (req.engine == "auto") {
    if (req.mode == Disjointness::kArc && is_eulerian(d)) return "eulerian";
    if (req.mode == Disjointness::kInternal && is_symmetric(d) && req.l) return "symmetric";
    return "exact";
  }
  if (req.engine == "exact") return "exact";
  if (req.engine == "eulerian") {
    if (req.mode != Disjointness::kArc) throw InputError("engine eulerian needs --mode arc");
    if (!is_eulerian(d)) throw InputError("engine eulerian needs an Eulerian digraph");
    return "eulerian";
  }
  if (req.engine == "symmetric") {
    if (req.mode != Disjointness::kInternal) throw InputError("engine symmetric needs --mode vertex");
    if (!is_symmetric(d)) throw InputError("engine symmetric needs a symmetric digraph");
    return "symmetric";
  }
  throw InputError("unknown engine '" + req.engine + "'");
}

// One (S, r): value, or decision when a threshold is given.
Answer solve_local(const std::string& engine, const SteinerInstance& inst, Disjointness mode,
                   std::optional<int> l, const ExactBudget& budget) {
  if (engine == "exact") {
    auto result = max_packing(inst, mode, budget);
    return Answer{result.value, std::move(result.certificate)};
  }
  if (engine == "eulerian") {
    const int value = eulerian_lambda(inst);
    const int want = l ? std::min(*l, value) : value;
    return Answer{value, eulerian_certificate(inst, want, budget)};
  }
  if (l) {
    if (*l <= 0) return Answer{0, TreePacking{{}, Disjointness::kInternal}};
    auto packing = symmetric_kappa_decide(inst, *l);
    // On a negative answer the value is only known to be below l.
    if (packing) return Answer{*l, std::move(packing)};
    return Answer{*l - 1, std::nullopt};
  }
  return symmetric_value(inst);
}

void validate_certificate(const ComputeReport& report, const Digraph& d) {
  if (!report.certificate) return;
  const auto inst = SteinerInstance::create(d, report.witness_set, report.witness_root);
  if (auto why = packing_violation(inst, *report.certificate)) {
    throw VerificationFailure("certificate rejected: " + *why);
  }
  if (report.certificate->mode != report.mode) throw VerificationFailure("certificate has the wrong mode");
}

}  // namespace

ComputeReport compute(const ComputeRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  const Digraph& d = req.file.graph;
  if (req.l && *req.l < 0) throw InputError("--l must be non-negative");
  ComputeReport report;
  report.mode = req.mode;
  report.engine = resolve_engine(req);
  report.threshold = req.l;
  report.k = req.k;

  if (req.k) {
    const int k = *req.k;
    if (k < 2 || k > d.order()) throw InputError("--k must lie in 2..n");
    if (report.engine == "exact") check_budget(d, req.budget);
    std::optional<Answer> best;
    for (const auto& rs : rooted_sets(d.order(), k)) {
      const auto inst = SteinerInstance::create(d, rs.terminals, rs.root);
      // certificates are produced for the witness only, below
      int value = 0;
      if (report.engine == "exact") {
        value = max_packing(inst, req.mode, req.budget).value;
      } else if (report.engine == "eulerian") {
        value = eulerian_lambda(inst);
      } else {
        value = solve_local("symmetric", inst, req.mode, req.l, req.budget).value;
      }
      if (!best || value < best->value) {
        best = Answer{value, std::nullopt};
        report.witness_set = rs.terminals;
        report.witness_root = rs.root;
      }
      if (req.l && value < *req.l && report.engine == "symmetric") break;
    }
    report.value = best->value;
    const auto witness = SteinerInstance::create(d, report.witness_set, report.witness_root);
    if (report.engine == "exact") {
      report.certificate = max_packing(witness, req.mode, req.budget).certificate;
    } else if (report.engine == "eulerian") {
      report.certificate = eulerian_certificate(witness, *report.value, req.budget);
    } else if (!req.l) {
      report.certificate = symmetric_value(witness).certificate;
    }
  } else {
    std::vector<Vertex> terminals;
    if (req.terminals) {
      terminals = *req.terminals;
    } else if (req.file.terminals) {
      terminals = *req.file.terminals;
    } else {
      throw InputError("no terminal set: give --set or an S line");
    }
    Vertex root = 0;
    if (req.root) {
      root = *req.root;
    } else if (req.file.root) {
      root = *req.file.root;
    } else {
      throw InputError("no root: give --root or an r line");
    }
    const auto inst = SteinerInstance::create(d, terminals, root);
    if (report.engine == "exact") check_budget(d, req.budget);
    auto answer = solve_local(report.engine, inst, req.mode, req.l, req.budget);
    report.witness_set = inst.terminals();
    report.witness_root = inst.root();
    report.certificate = std::move(answer.certificate);
    // a symmetric threshold query only decides; it does not determine the value
    if (!(report.engine == "symmetric" && req.l)) report.value = answer.value;
    if (report.engine == "symmetric" && req.l) report.decision = report.certificate.has_value();
  }
  if (req.l && !report.decision) report.decision = report.value && *report.value >= *req.l;
  if (report.k && report.engine == "symmetric" && req.l) report.value.reset();
  validate_certificate(report, d);
  if (report.certificate && report.value &&
      static_cast<int>(report.certificate->trees.size()) != *report.value && !req.l) {
    throw VerificationFailure("certificate size differs from the reported value");
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const ComputeReport& report, const Digraph& graph) {
  nlohmann::json j;
  j["engine"] = report.engine;
  j["mode"] = std::string(to_string(report.mode));
  j["value"] = report.value ? nlohmann::json(*report.value) : nlohmann::json(nullptr);
  if (report.threshold) {
    j["threshold"] = *report.threshold;
    j["decision"] = report.decision.value_or(false);
  }
  if (report.k) j["k"] = *report.k;
  if (report.certificate) {
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& tree : report.certificate->trees) {
      nlohmann::json arcs = nlohmann::json::array();
      for (const Arc& a : tree_pairs(graph, tree)) arcs.push_back({a.tail, a.head});
      trees.push_back(std::move(arcs));
    }
    j["certificate"] = std::move(trees);
  } else {
    j["certificate"] = nullptr;
  }
  j["witness_set"] = report.witness_set;
  j["witness_root"] = report.witness_root;
  j["time_ms"] = report.seconds * 1000.0;
  return j;
}

}  // namespace treeconn::cli
