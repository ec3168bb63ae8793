#include <random>
#include <sstream>

#include "treeconn/errors.hpp"
#include "treeconn/families.hpp"
#include "treeconn/random_graphs.hpp"
#include "treeconn/reductions.hpp"
#include "treeconn_cli/app.hpp"

namespace treeconn::cli {

namespace {

using nlohmann::json;

int need(const std::optional<int>& value, const char* flag) {
  if (!value) throw InputError(std::string("missing --") + flag);
  return *value;
}

int need_range(const std::optional<int>& value, const char* flag, int lo, int hi) {
  const int v = need(value, flag);
  if (v < lo || v > hi) {
    throw InputError(std::string("--") + flag + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

// "0 1;1 2" -> {{0,1},{1,2}}
std::vector<std::vector<Vertex>> parse_groups(const std::string& text) {
  std::vector<std::vector<Vertex>> groups;
  std::stringstream whole(text);
  std::string part;
  while (std::getline(whole, part, ';')) {
    std::istringstream in(part);
    std::vector<Vertex> group;
    std::string word;
    while (in >> word) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(word, &used);
        if (used != word.size()) throw std::invalid_argument(word);
        group.push_back(v);
      } catch (const std::logic_error&) {
        throw InputError("bad vertex '" + word + "' in --edges");
      }
    }
    if (!group.empty()) groups.push_back(std::move(group));
  }
  return groups;
}

json per_k(int from, int to, int value) {
  json j = json::object();
  for (int k = from; k <= to; ++k) j[std::to_string(k)] = value;
  return j;
}

std::string instance_text(const Digraph& d) { return write_digraph(d); }

Generated single(const Digraph& d, json meta) {
  meta["n"] = d.order();
  meta["arcs"] = d.size();
  return Generated{{GeneratedFile{"", instance_text(d)}}, std::move(meta)};
}

json certificate_json(const Digraph& d, const TreePacking& packing) {
  json trees = json::array();
  for (const auto& tree : packing.trees) {
    json arcs = json::array();
    for (const Arc& a : tree_pairs(d, tree)) arcs.push_back({a.tail, a.head});
    trees.push_back(std::move(arcs));
  }
  return trees;
}

Generated reduction(const ReductionOutput& out, bool source_yes, json meta) {
  meta["threshold"] = out.threshold;
  meta["mode"] = std::string(to_string(out.mode));
  meta["expect"] = source_yes ? "at-least-threshold" : "below-threshold";
  meta["labels"] = out.labels;
  meta["n"] = out.instance.graph().order();
  meta["arcs"] = out.instance.graph().size();
  return Generated{{GeneratedFile{"", write_instance(to_file(out.instance))}}, std::move(meta)};
}

Generated gen_complete(const GenerateParams& p) {
  const int n = need_range(p.n, "n", 2, 64);
  json meta{{"family", "complete"}, {"kappa_k", per_k(2, n, n - 1)}, {"lambda_k", per_k(2, n, n - 1)}};
  return single(complete_symmetric(n), std::move(meta));
}

Generated gen_glued(const GenerateParams& p) {
  const int t = need_range(p.t, "t", 4, 32);
  const auto g = glued_cliques(t);
  json meta{{"family", "glued"}, {"t", t}, {"cut_vertex", g.cut_vertex}, {"kappa_k", per_k(2, 2 * t - 2, 1)}};
  meta["kappa_k_lower"] = json{{std::to_string(2 * t - 1), t / 2}};
  return single(g.graph, std::move(meta));
}

Generated gen_join(const GenerateParams& p) {
  const int k = need_range(p.k, "k", 1, 20);
  const int n = need_range(p.n, "n", 3 * k, 64);
  json meta{{"family", "join"}, {"k", k}, {"kappa_k", k}, {"lambda_k", k}, {"kappa", k}, {"lambda", k}};
  return single(join_family(k, n), std::move(meta));
}

Generated gen_bipartite_ham(const GenerateParams& p) {
  const int a = need_range(p.a, "a", 2, 32);
  json meta{{"family", "bipartite-ham"}, {"a", a}, {"cycles", ham_decompose_bipartite(a)}};
  return single(complete_bipartite_symmetric(a, a), std::move(meta));
}

Generated gen_ng_pair(const GenerateParams& p) {
  const int a = need_range(p.a, "a", 2, 16);
  const auto pair = nordhaus_gaddum_pair(a);
  const int n = 2 * a;
  json meta{{"family", "ng-pair"},
            {"a", a},
            {"n", n},
            {"files", {"", "-complement"}},
            {"lambda_k", per_k(2, n, a - 1)},
            {"lambda_k_complement", per_k(2, n, a)},
            {"complement_root", pair.root},
            {"complement_certificate", certificate_json(pair.complement, pair.certificate)}};
  return Generated{{GeneratedFile{"", instance_text(pair.graph)},
                    GeneratedFile{"-complement", instance_text(pair.complement)}},
                   std::move(meta)};
}

Generated gen_cycle(const GenerateParams& p) {
  const int n = need_range(p.n, "n", 2, 1 << 16);
  json meta{{"family", "cycle"}, {"kappa_k", per_k(2, n, 1)}, {"lambda_k", per_k(2, n, 1)}};
  return single(directed_cycle(n), std::move(meta));
}

Generated gen_random(const GenerateParams& p, const std::string& kind) {
  const int n = need_range(p.n, "n", 1, 4096);
  std::mt19937_64 rng(p.seed);
  json meta{{"family", kind}, {"seed", p.seed}};
  if (kind == "random-eulerian") {
    const int cycles = need_range(p.cycles.has_value() ? p.cycles : std::optional<int>(3), "cycles", 1, 1000);
    if (n < 2) throw InputError("--n must be at least 2");
    meta["cycles"] = cycles;
    return single(random_eulerian(n, cycles, rng), std::move(meta));
  }
  const double prob = p.p.value_or(0.5);
  if (prob < 0 || prob > 1) throw InputError("--p must lie in [0,1]");
  meta["p"] = prob;
  if (kind == "random-symmetric") return single(random_symmetric(n, prob, rng), std::move(meta));
  return single(random_digraph(n, prob, rng), std::move(meta));
}

std::string source_text(const GenerateParams& p) {
  if (!p.input) throw InputError("missing --input");
  return read_text_file(*p.input);
}

Generated gen_amplify(const GenerateParams& p) {
  const auto file = parse_instance(source_text(p));
  if (!file.terminals || !file.root) throw InputError("amplify input needs S and r lines");
  const auto base = SteinerInstance::create(file.graph, *file.terminals, *file.root);
  const int k = need_range(p.k, "k", 3, 64);
  const int l = need_range(p.l, "l", 2, 64);
  const auto out = amplify_3_2(base, k, l, p.mode);
  const bool yes = packing_at_least(base, p.mode, 2).has_value();
  return reduction(out, yes, json{{"reduction", "amplify"}, {"k", k}, {"l", l}});
}

Generated gen_cllm(const GenerateParams& p) {
  TripartiteInstance g;
  if (p.input) {
    g = parse_tripartite(source_text(p));
  } else {
    g.q = need_range(p.q, "q", 1, 64);
    for (const auto& e : parse_groups(p.edges.value_or(""))) {
      if (e.size() != 2) throw InputError("tripartite edges take two vertices");
      g.edges.emplace_back(e[0], e[1]);
    }
    validate(g);
  }
  const int k = need_range(p.k, "k", 3, 64);
  const auto out = cllm_reduce(g, k);
  return reduction(out, cllm_solve(g).has_value(), json{{"reduction", "cllm-reduce"}, {"q", g.q}, {"k", k}});
}

Generated gen_hypergraph(const GenerateParams& p) {
  Hypergraph h;
  if (p.input) {
    h = parse_hypergraph(source_text(p));
  } else {
    h.edges = parse_groups(p.edges.value_or(""));
    int n = 0;
    for (const auto& e : h.edges)
      for (Vertex v : e) n = std::max(n, v + 1);
    h.n = p.hn.value_or(n);
    validate(h);
  }
  const int l = need_range(p.l, "l", 2, 64);
  const auto out = hypergraph_reduce(h, l);
  return reduction(out, hypergraph_2color(h).has_value(),
                   json{{"reduction", "hypergraph-reduce"}, {"hn", h.n}, {"l", l}});
}

Generated gen_eulerian(const GenerateParams& p) {
  const auto file = parse_linkage(source_text(p));
  const int k = need_range(p.k, "k", 3, 64);
  const int l = need_range(p.l, "l", 2, 64);
  const auto out = eulerian_kappa_reduce(file.graph, file.s1, file.t1, file.s2, file.t2, k, l);
  const bool yes = two_linkage_directed(file.graph, file.s1, file.t1, file.s2, file.t2).has_value();
  return reduction(out, yes, json{{"reduction", "eulerian-reduce"}, {"k", k}, {"l", l}});
}

}  // namespace

std::vector<std::string> generator_names() {
  return {"complete",        "glued",          "join",         "bipartite-ham",   "ng-pair",
          "cycle",           "random",         "random-eulerian", "random-symmetric", "amplify",
          "cllm-reduce",     "hypergraph-reduce", "eulerian-reduce"};
}

Generated generate(const std::string& name, const GenerateParams& p) {
  if (name == "complete") return gen_complete(p);
  if (name == "glued") return gen_glued(p);
  if (name == "join") return gen_join(p);
  if (name == "bipartite-ham") return gen_bipartite_ham(p);
  if (name == "ng-pair") return gen_ng_pair(p);
  if (name == "cycle") return gen_cycle(p);
  if (name == "random" || name == "random-eulerian" || name == "random-symmetric") return gen_random(p, name);
  if (name == "amplify") return gen_amplify(p);
  if (name == "cllm-reduce") return gen_cllm(p);
  if (name == "hypergraph-reduce") return gen_hypergraph(p);
  if (name == "eulerian-reduce") return gen_eulerian(p);
  throw InputError("unknown generator '" + name + "'");
}

}  // namespace treeconn::cli
