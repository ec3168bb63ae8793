#include "treeconn_cli/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>

#include "treeconn/connectivity.hpp"
#include "treeconn/errors.hpp"
#include "treeconn/families.hpp"
#include "treeconn/packing_exact.hpp"
#include "treeconn/packing_fast.hpp"
#include "treeconn/random_graphs.hpp"
#include "treeconn/reductions.hpp"
#include "treeconn_cli/instance_io.hpp"

namespace treeconn::cli {

namespace {

class Recorder {
 public:
  Recorder(std::string suite, const SuiteParams& params) : params_(params) { report_.suite = std::move(suite); }

  void count(const std::string& tally = {}) {
    ++report_.cases;
    if (!tally.empty()) ++report_.tallies[tally];
  }
  void tally(const std::string& name) { ++report_.tallies[name]; }

  // Records a failed check; returns ok so callers can chain.
  bool check(bool ok, const std::string& what, const std::string& instance_text) {
    if (ok) return true;
    Violation v{what, instance_text, {}};
    if (!params_.reproducer_dir.empty()) {
      std::filesystem::create_directories(params_.reproducer_dir);
      const auto path = std::filesystem::path(params_.reproducer_dir) /
                        (report_.suite + "-" + std::to_string(report_.violations.size()) + ".txt");
      write_text_file(path.string(), "# violation: " + what + "\n" + instance_text);
      v.file = path.string();
    }
    report_.violations.push_back(std::move(v));
    return false;
  }

  SuiteReport take() { return std::move(report_); }

 private:
  const SuiteParams& params_;
  SuiteReport report_;
};

bool is_complete(const Digraph& d) {
  const int n = d.order();
  return d.is_simple() && static_cast<int>(d.size()) == n * (n - 1);
}

ExactBudget wide_budget() {
  ExactBudget budget;
  budget.max_vertices = 16;
  budget.max_arcs = 120;
  return budget;
}

int global_value(const Digraph& d, int k, Disjointness mode) {
  return global_tree_connectivity(d, k, mode, wide_budget()).value;
}

Digraph sample_digraph(int nmax, std::mt19937_64& rng) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, nmax - 1)));
  const int shape = static_cast<int>(rng() % 20);
  if (shape == 0) return complete_symmetric(n);
  if (shape == 1) {
    const Digraph k = complete_symmetric(n);
    std::vector<bool> keep(k.size(), true);
    keep[rng() % k.size()] = false;
    return spanning_subgraph(k, keep);
  }
  std::uniform_real_distribution<double> density(0.2, 0.95);
  return random_digraph(n, density(rng), rng);
}

std::string text_of(const Digraph& d) { return write_digraph(d); }

std::string text_of(const SteinerInstance& inst) { return write_instance(to_file(inst)); }

std::string lbl(const char* what, int k) { return std::string(what) + " (k=" + std::to_string(k) + ")"; }

SuiteReport suite_bounds(const SuiteParams& p) {
  Recorder rec("bounds", p);
  std::mt19937_64 rng(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    const Digraph d = sample_digraph(p.nmax, rng);
    const int n = d.order();
    const std::string text = text_of(d);
    const int delta = std::min(d.min_out_degree(), d.min_in_degree());
    const int kappa = global_kappa(d);
    const int lambda = global_lambda(d);
    const bool strong = is_strong(d);
    const bool complete = is_complete(d);
    std::vector<int> kap(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> lam(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 2; k <= n; ++k) {
      kap[static_cast<std::size_t>(k)] = global_value(d, k, Disjointness::kInternal);
      lam[static_cast<std::size_t>(k)] = global_value(d, k, Disjointness::kArc);
    }
    rec.count(complete ? "complete" : strong ? "strong" : "not strong");
    for (int k = 2; k <= n; ++k) {
      const int kk = kap[static_cast<std::size_t>(k)];
      const int lk = lam[static_cast<std::size_t>(k)];
      rec.check(kk <= lk, lbl("kappa_k <= lambda_k", k), text);
      rec.check(lk <= delta, lbl("lambda_k <= min degree", k), text);
      if (k < n) rec.check(lam[static_cast<std::size_t>(k) + 1] <= lk, lbl("lambda_{k+1} <= lambda_k", k), text);
      if (n >= kappa + k) rec.check(kk <= kappa, lbl("kappa_k <= kappa when n >= kappa + k", k), text);
      rec.check(lk <= lambda, lbl("lambda_k <= lambda", k), text);
      rec.check(strong == (lk >= 1), lbl("strong iff lambda_k >= 1", k), text);
      rec.check((kk == n - 1) == complete, lbl("kappa_k = n-1 iff complete", k), text);
      rec.check((lk == n - 1) == complete, lbl("lambda_k = n-1 iff complete", k), text);
    }
  }
  return rec.take();
}

SuiteReport suite_monotonicity(const SuiteParams& p) {
  Recorder rec("monotonicity", p);
  std::mt19937_64 rng(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    const Digraph d = sample_digraph(p.nmax, rng);
    const int n = d.order();
    const std::string text = text_of(d);
    rec.count();
    std::vector<int> lam(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 2; k <= n; ++k) lam[static_cast<std::size_t>(k)] = global_value(d, k, Disjointness::kArc);
    for (int k = 2; k < n; ++k) {
      rec.check(lam[static_cast<std::size_t>(k) + 1] <= lam[static_cast<std::size_t>(k)],
                lbl("lambda_{k+1} <= lambda_k", k), text);
    }
    if (d.size() == 0) continue;
    std::vector<bool> keep(d.size(), true);
    keep[rng() % d.size()] = false;
    const Digraph sub = spanning_subgraph(d, keep);
    const int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    for (const auto& rs : rooted_sets(n, k)) {
      const auto big = SteinerInstance::create(d, rs.terminals, rs.root);
      const auto small = SteinerInstance::create(sub, rs.terminals, rs.root);
      for (auto mode : {Disjointness::kArc, Disjointness::kInternal}) {
        rec.check(max_packing(small, mode).value <= max_packing(big, mode).value,
                  std::string("spanning subdigraph does not increase the ") + std::string(to_string(mode)) +
                      " packing",
                  text_of(big));
      }
    }
  }
  return rec.take();
}

SuiteReport suite_characterization(const SuiteParams& p) {
  Recorder rec("characterization", p);
  auto check_graph = [&](const Digraph& d) {
    const int n = d.order();
    const bool complete = is_complete(d);
    rec.count(complete ? "complete" : "not complete");
    for (int k = 2; k <= n; ++k) {
      const int kk = global_value(d, k, Disjointness::kInternal);
      const int lk = global_value(d, k, Disjointness::kArc);
      rec.check((kk == n - 1) == complete, lbl("kappa_k = n-1 iff complete", k), text_of(d));
      rec.check((lk == n - 1) == complete, lbl("lambda_k = n-1 iff complete", k), text_of(d));
      rec.check(kk <= n - 1 && lk <= n - 1, lbl("values at most n-1", k), text_of(d));
    }
  };
  // every digraph on up to 3 vertices
  for (int n = 2; n <= std::min(3, p.nmax); ++n) {
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v) pairs.push_back(Arc{u, v});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) arcs.push_back(pairs[i]);
      check_graph(Digraph::build(n, arcs));
    }
  }
  // complete digraphs and every one-arc deletion
  for (int n = 4; n <= p.nmax; ++n) {
    const Digraph k = complete_symmetric(n);
    check_graph(k);
    for (std::size_t a = 0; a < k.size(); ++a) {
      std::vector<bool> keep(k.size(), true);
      keep[a] = false;
      check_graph(spanning_subgraph(k, keep));
    }
  }
  std::mt19937_64 rng(p.seed);
  for (int s = 0; s < p.samples; ++s) check_graph(sample_digraph(p.nmax, rng));
  return rec.take();
}

SuiteReport suite_eulerian(const SuiteParams& p) {
  Recorder rec("eulerian-agreement", p);
  std::mt19937_64 rng(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    const int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, p.nmax - 2)));
    const int cycles = 2 + static_cast<int>(rng() % 3);
    const Digraph d = random_eulerian(n, cycles, rng);
    rec.count();
    for (int k = 2; k <= std::min(p.kmax, n); ++k) {
      for (const auto& rs : rooted_sets(n, k)) {
        const auto inst = SteinerInstance::create(d, rs.terminals, rs.root);
        const int fast = eulerian_lambda(inst);
        const auto exact = max_packing(inst, Disjointness::kArc);
        rec.tally("rooted sets");
        rec.check(fast == exact.value,
                  "eulerian value " + std::to_string(fast) + " vs exact " + std::to_string(exact.value),
                  text_of(inst));
        rec.check(is_valid_packing(inst, exact.certificate), "exact certificate invalid", text_of(inst));
      }
    }
  }
  return rec.take();
}

SuiteReport suite_symmetric(const SuiteParams& p) {
  Recorder rec("symmetric-agreement", p);
  auto check_graph = [&](const Digraph& d) {
    const int n = d.order();
    rec.count();
    for (int k = 2; k <= std::min(p.kmax, n); ++k) {
      for (const auto& rs : rooted_sets(n, k)) {
        const auto inst = SteinerInstance::create(d, rs.terminals, rs.root);
        const int value = max_packing(inst, Disjointness::kInternal).value;
        for (int l = 1; l <= p.lmax; ++l) {
          const auto got = symmetric_kappa_decide(inst, l);
          rec.tally(got ? "decided yes" : "decided no");
          rec.check(got.has_value() == (value >= l),
                    "l=" + std::to_string(l) + ": symmetric " + (got ? "yes" : "no") + ", exact value " +
                        std::to_string(value),
                    text_of(inst));
          if (got) rec.check(is_valid_packing(inst, *got), "symmetric certificate invalid", text_of(inst));
        }
      }
    }
  };
  for (int n = 2; n <= std::min(p.exhaustive_nmax, p.nmax); ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      check_graph(symmetric_from_edges(n, edges));
    }
  }
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> density(0.3, 0.9);
  for (int s = 0; s < p.samples; ++s) check_graph(random_symmetric(p.nmax, density(rng), rng));
  return rec.take();
}

// Union of random directed cycles, not necessarily connected.
Digraph random_balanced(int n, int cycles, std::mt19937_64& rng) {
  std::set<Arc> arcs;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (int c = 0; c < cycles; ++c) {
    std::shuffle(order.begin(), order.end(), rng);
    const int len = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<Arc> cyc;
    for (int i = 0; i < len; ++i) {
      cyc.push_back(Arc{order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % len)]});
    }
    if (std::none_of(cyc.begin(), cyc.end(), [&](const Arc& a) { return arcs.count(a) != 0; })) {
      arcs.insert(cyc.begin(), cyc.end());
    }
  }
  return Digraph::build(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

SuiteReport suite_reductions(const SuiteParams& p) {
  Recorder rec("reductions", p);
  std::mt19937_64 rng(p.seed);
  auto agree = [&](const char* name, bool source, const ReductionOutput& out, const std::string& source_text) {
    const bool meets = packing_at_least(out.instance, out.mode, out.threshold, wide_budget()).has_value();
    rec.count(std::string(name) + (source ? " yes" : " no"));
    rec.check(source == meets,
              std::string(name) + ": source " + (source ? "yes" : "no") + ", packing " + (meets ? "yes" : "no"),
              "# source\n# " + source_text + "\n" + text_of(out.instance));
  };
  auto commented = [](std::string text) {
    std::string out;
    for (char c : text) out += c == '\n' ? std::string("\n# ") : std::string(1, c);
    return out;
  };

  for (int s = 0; s < p.samples; ++s) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const Digraph base_graph = random_digraph(n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
    const auto sets = rooted_sets(n, 3);
    const auto& pick = sets[rng() % sets.size()];
    const auto base = SteinerInstance::create(base_graph, pick.terminals, pick.root);
    const int k = 3 + static_cast<int>(rng() % 2);
    const int l = 2 + static_cast<int>(rng() % 2);
    const auto mode = s % 2 == 0 ? Disjointness::kInternal : Disjointness::kArc;
    const bool source = packing_at_least(base, mode, 2).has_value();
    agree("amplify", source, amplify_3_2(base, k, l, mode), commented(text_of(base)));
  }
  for (int s = 0; s < p.samples; ++s) {
    TripartiteInstance g;
    g.q = s % 4 == 3 ? 3 : 1 + static_cast<int>(rng() % 2);
    const double density = g.q == 3 ? 0.3 : 0.45;
    std::bernoulli_distribution coin(density);
    for (Vertex u = 0; u < 3 * g.q; ++u)
      for (Vertex v = u + 1; v < 3 * g.q; ++v)
        if (u / g.q != v / g.q && coin(rng)) g.edges.emplace_back(u, v);
    const int k = g.q == 3 ? 3 : 3 + static_cast<int>(rng() % 2);
    agree("cllm", cllm_solve(g).has_value(), cllm_reduce(g, k), commented(write_tripartite(g)));
  }
  for (int s = 0; s < p.samples; ++s) {
    Hypergraph h;
    // mostly 2-edges, so odd cycles (the non-colourable case) turn up often
    h.n = 3 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 3);
    for (int j = 0; j < m; ++j) {
      std::vector<Vertex> e;
      if (rng() % 5 != 0) {
        const Vertex a = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(h.n));
        Vertex b = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(h.n - 1));
        if (b >= a) ++b;
        e = {std::min(a, b), std::max(a, b)};
      } else {
        for (Vertex x = 0; x < h.n; ++x)
          if (rng() % 2 == 0) e.push_back(x);
        if (e.size() < 2) e = {0, 1};
      }
      h.edges.push_back(e);
    }
    const int l = 2 + static_cast<int>(rng() % 2);
    agree("hypergraph", hypergraph_2color(h).has_value(), hypergraph_reduce(h, l), commented(write_hypergraph(h)));
  }
  for (int s = 0; s < p.samples; ++s) {
    const int n = 4 + static_cast<int>(rng() % 2);
    const Digraph h = random_balanced(n, 1 + static_cast<int>(rng() % 3), rng);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const int k = 3 + static_cast<int>(rng() % 2);
    const int l = 2 + static_cast<int>(rng() % 2);
    const bool source = two_linkage_directed(h, order[0], order[1], order[2], order[3]).has_value();
    const LinkageFile lf{h, order[0], order[1], order[2], order[3]};
    const auto out = eulerian_kappa_reduce(h, order[0], order[1], order[2], order[3], k, l);
    rec.check(is_eulerian(out.instance.graph()), "eulerian reduction output not Eulerian", text_of(out.instance));
    agree("eulerian", source, out, commented(write_linkage(lf)));
  }
  return rec.take();
}

SuiteReport suite_nordhaus_gaddum(const SuiteParams& p) {
  Recorder rec("nordhaus-gaddum", p);
  for (int a = 2; a <= p.amax; ++a) {
    const auto pair = nordhaus_gaddum_pair(a);
    const int n = 2 * a;
    rec.count("family");
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    rec.check(is_valid_packing(SteinerInstance::create(pair.complement, all, pair.root), pair.certificate),
              "complement certificate invalid (a=" + std::to_string(a) + ")", text_of(pair.complement));
    for (int k = 2; k <= std::min(p.kmax, n); ++k) {
      const int ld = global_value(pair.graph, k, Disjointness::kArc);
      const int lc = global_value(pair.complement, k, Disjointness::kArc);
      const std::string tag = " (a=" + std::to_string(a) + ", k=" + std::to_string(k) + ")";
      rec.check(ld == a - 1, "lambda_k(D) = a-1" + tag, text_of(pair.graph));
      rec.check(lc == a, "lambda_k(D^c) = a" + tag, text_of(pair.complement));
      rec.check(ld + lc == 2 * a - 1 && ld + lc <= n - 1, "sum = 2a-1 <= n-1" + tag, text_of(pair.graph));
      rec.check(ld * lc == a * (a - 1) && ld * lc == ((n - 1) * (n - 1)) / 4, "product = a(a-1)" + tag,
                text_of(pair.graph));
    }
  }
  std::mt19937_64 rng(p.seed);
  for (int s = 0; s < p.samples; ++s) {
    const Digraph d = sample_digraph(p.nmax, rng);
    const Digraph c = complement(d);
    const int n = d.order();
    rec.count("random");
    const bool both_zero = global_lambda(d) == 0 && global_lambda(c) == 0;
    for (int k = 2; k <= n; ++k) {
      const int sum = global_value(d, k, Disjointness::kArc) + global_value(c, k, Disjointness::kArc);
      rec.check(sum >= 0 && sum <= n - 1, lbl("0 <= sum <= n-1", k), text_of(d));
      rec.check((sum == 0) == both_zero, lbl("sum = 0 iff lambda(D) = lambda(D^c) = 0", k), text_of(d));
    }
  }
  return rec.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"bounds", "monotonicity", "characterization", "eulerian-agreement", "symmetric-agreement", "reductions",
          "nordhaus-gaddum"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  if (params.nmax < 2) throw InputError("nmax must be at least 2");
  if (params.samples < 0) throw InputError("samples must be non-negative");
  if (name == "bounds") return suite_bounds(params);
  if (name == "monotonicity") return suite_monotonicity(params);
  if (name == "characterization") return suite_characterization(params);
  if (name == "eulerian-agreement") return suite_eulerian(params);
  if (name == "symmetric-agreement") return suite_symmetric(params);
  if (name == "reductions") return suite_reductions(params);
  if (name == "nordhaus-gaddum") return suite_nordhaus_gaddum(params);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace treeconn::cli
