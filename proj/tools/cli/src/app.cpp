#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "treeconn/errors.hpp"
#include "treeconn_cli/app.hpp"
#include "treeconn_cli/suites.hpp"

namespace treeconn::cli {

namespace {

using nlohmann::json;

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<Vertex> out;
  std::string word;
  while (in >> word) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(word, &used);
      if (used != word.size()) throw std::invalid_argument(word);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad vertex '" + word + "' in --set");
    }
  }
  return out;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

void print_table(const ComputeReport& r, const Digraph& d, std::ostream& out) {
  out << std::left;
  auto row = [&](const std::string& key, const std::string& value) { out << std::setw(12) << key << value << '\n'; };
  row("engine", r.engine);
  row("mode", std::string(to_string(r.mode)));
  if (r.k) row("k", std::to_string(*r.k));
  row(r.k ? "witness S" : "S", join(r.witness_set));
  row(r.k ? "witness r" : "r", std::to_string(r.witness_root));
  row("value", r.value ? std::to_string(*r.value) : "-");
  if (r.threshold) {
    row("threshold", std::to_string(*r.threshold));
    row("decision", r.decision.value_or(false) ? "yes" : "no");
  }
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.seconds * 1000.0 << " ms";
  row("time", ms.str());
  if (!r.certificate) {
    row("certificate", "-");
    return;
  }
  row("certificate", std::to_string(r.certificate->trees.size()) + " tree(s)");
  for (std::size_t i = 0; i < r.certificate->trees.size(); ++i) {
    std::string arcs;
    for (const Arc& a : tree_pairs(d, r.certificate->trees[i])) {
      arcs += (arcs.empty() ? "" : " ") + std::to_string(a.tail) + "->" + std::to_string(a.head);
    }
    row("  T" + std::to_string(i + 1), arcs);
  }
}

void print_suite(const SuiteReport& r, std::ostream& out) {
  out << "suite " << r.suite << ": " << r.cases << " case(s), " << r.violations.size() << " violation(s)\n";
  for (const auto& [name, count] : r.tallies) out << "  " << name << ": " << count << '\n';
  for (const auto& v : r.violations) {
    out << "  violation: " << v.what;
    if (!v.file.empty()) out << " (reproducer " << v.file << ")";
    out << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

json suite_json(const SuiteReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"what", v.what}, {"file", v.file}});
  return json{{"suite", r.suite},
              {"cases", r.cases},
              {"tallies", r.tallies},
              {"violations", violations},
              {"passed", r.passed()}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed Steiner tree packing: compute, generate and verify."};
  app.require_subcommand(1);

  // compute
  auto* compute_cmd = app.add_subcommand("compute", "Packing number or threshold decision for one instance or all k-sets");
  std::string input, set_text, mode_text = "arc", engine = "auto";
  int root = 0, k = 0, l = 0, budget_n = ExactBudget{}.max_vertices, budget_arcs = ExactBudget{}.max_arcs;
  bool as_json = false;
  compute_cmd->add_option("--input", input, "Instance file")->required();
  auto* set_opt = compute_cmd->add_option("--set", set_text, "Terminal set, e.g. 0,1,2");
  auto* root_opt = compute_cmd->add_option("--root", root, "Root vertex");
  compute_cmd->add_option("--mode", mode_text, "arc or vertex")->capture_default_str();
  auto* k_opt = compute_cmd->add_option("--k", k, "Global parameter over all k-subsets");
  auto* l_opt = compute_cmd->add_option("--l", l, "Threshold: decide whether l trees exist");
  compute_cmd->add_option("--engine", engine, "auto, exact, eulerian or symmetric")->capture_default_str();
  compute_cmd->add_option("--budget-n", budget_n, "Vertex limit for exact search")->capture_default_str();
  compute_cmd->add_option("--budget-arcs", budget_arcs, "Arc limit for exact search")->capture_default_str();
  compute_cmd->add_flag("--json", as_json, "Machine-readable output");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write a family member or a reduction output");
  std::string gen_name, out_prefix, edges, gen_input, gen_mode = "vertex";
  int gn = 0, gt = 0, gk = 0, gl = 0, ga = 0, gq = 0, gcycles = 0, ghn = 0;
  double gp = 0.5;
  std::uint64_t seed = 1;
  gen_cmd->add_option("name", gen_name, "Generator")->required()->check(CLI::IsMember(generator_names()));
  auto* gn_opt = gen_cmd->add_option("--n", gn);
  auto* gt_opt = gen_cmd->add_option("--t", gt);
  auto* gk_opt = gen_cmd->add_option("--k", gk);
  auto* gl_opt = gen_cmd->add_option("--l", gl);
  auto* ga_opt = gen_cmd->add_option("--a", ga);
  auto* gq_opt = gen_cmd->add_option("--q", gq);
  auto* gc_opt = gen_cmd->add_option("--cycles", gcycles);
  auto* ghn_opt = gen_cmd->add_option("--hn", ghn, "Hypergraph vertex count (default: from --edges)");
  auto* gp_opt = gen_cmd->add_option("--p", gp, "Arc or edge probability");
  gen_cmd->add_option("--seed", seed)->capture_default_str();
  auto* edges_opt = gen_cmd->add_option("--edges", edges, "Source edges, e.g. \"0 1;1 2;0 2\"");
  auto* gin_opt = gen_cmd->add_option("--input", gen_input, "Source instance for reductions");
  gen_cmd->add_option("--mode", gen_mode, "Disjointness for amplify")->capture_default_str();
  gen_cmd->add_option("--out", out_prefix, "Write <out>.txt and <out>.json instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite over generated corpora");
  std::string suite;
  SuiteParams sp;
  bool verify_json = false;
  verify_cmd->add_option("suite", suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--nmax", sp.nmax)->capture_default_str();
  verify_cmd->add_option("--samples", sp.samples)->capture_default_str();
  verify_cmd->add_option("--seed", sp.seed)->capture_default_str();
  verify_cmd->add_option("--kmax", sp.kmax)->capture_default_str();
  verify_cmd->add_option("--lmax", sp.lmax)->capture_default_str();
  verify_cmd->add_option("--amax", sp.amax)->capture_default_str();
  verify_cmd->add_option("--exhaustive-nmax", sp.exhaustive_nmax)->capture_default_str();
  verify_cmd->add_option("--reproducers", sp.reproducer_dir, "Directory for reproducer files")->capture_default_str();
  verify_cmd->add_flag("--json", verify_json);

  // format
  auto* fmt_cmd = app.add_subcommand("format", "Print the canonical form of an input file");
  std::string fmt_input, fmt_kind = "instance";
  fmt_cmd->add_option("--input", fmt_input)->required();
  fmt_cmd->add_option("--kind", fmt_kind, "instance, hypergraph, tripartite or linkage")
      ->check(CLI::IsMember({"instance", "hypergraph", "tripartite", "linkage"}))
      ->capture_default_str();

  std::vector<std::string> argv_store{"treeconn"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute_cmd) {
      ComputeRequest req;
      req.file = parse_instance(read_text_file(input));
      if (*set_opt) req.terminals = parse_vertex_list(set_text);
      if (*root_opt) req.root = root;
      req.mode = parse_disjointness(mode_text);
      if (*k_opt) req.k = k;
      if (*l_opt) req.l = l;
      req.engine = engine;
      req.budget.max_vertices = budget_n;
      req.budget.max_arcs = budget_arcs;
      const auto report = compute(req);
      if (as_json) {
        out << to_json(report, req.file.graph).dump() << '\n';
      } else {
        print_table(report, req.file.graph, out);
      }
      return report.threshold && !report.decision.value_or(false) ? kExitNegative : kExitOk;
    }
    if (*gen_cmd) {
      GenerateParams p;
      if (*gn_opt) p.n = gn;
      if (*gt_opt) p.t = gt;
      if (*gk_opt) p.k = gk;
      if (*gl_opt) p.l = gl;
      if (*ga_opt) p.a = ga;
      if (*gq_opt) p.q = gq;
      if (*gc_opt) p.cycles = gcycles;
      if (*ghn_opt) p.hn = ghn;
      if (*gp_opt) p.p = gp;
      if (*edges_opt) p.edges = edges;
      if (*gin_opt) p.input = gen_input;
      p.seed = seed;
      p.mode = parse_disjointness(gen_mode);
      auto result = generate(gen_name, p);
      result.metadata["generator"] = gen_name;
      if (out_prefix.empty()) {
        for (const auto& f : result.files) {
          if (result.files.size() > 1) out << "# file " << (f.suffix.empty() ? "main" : f.suffix.substr(1)) << '\n';
          out << f.text;
        }
        out << "# meta " << result.metadata.dump() << '\n';
      } else {
        for (const auto& f : result.files) {
          write_text_file(out_prefix + f.suffix + ".txt", f.text);
          out << "wrote " << out_prefix + f.suffix + ".txt\n";
        }
        write_text_file(out_prefix + ".json", result.metadata.dump(2) + "\n");
        out << "wrote " << out_prefix << ".json\n";
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto report = run_suite(suite, sp);
      if (verify_json) {
        out << suite_json(report).dump() << '\n';
      } else {
        print_suite(report, out);
      }
      return report.passed() ? kExitOk : kExitVerification;
    }
    if (*fmt_cmd) {
      const std::string text = read_text_file(fmt_input);
      if (fmt_kind == "instance") out << write_instance(parse_instance(text));
      if (fmt_kind == "hypergraph") out << write_hypergraph(parse_hypergraph(text));
      if (fmt_kind == "tripartite") out << write_tripartite(parse_tripartite(text));
      if (fmt_kind == "linkage") out << write_linkage(parse_linkage(text));
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitInput;
}

}  // namespace treeconn::cli
