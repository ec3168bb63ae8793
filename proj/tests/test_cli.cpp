#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"

#include "treeconn/families.hpp"
#include "treeconn/random_graphs.hpp"
#include "treeconn_cli/app.hpp"
#include "treeconn_cli/instance_io.hpp"
#include "treeconn_cli/suites.hpp"

using namespace treeconn;
using namespace treeconn::cli;

namespace {

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "treeconn_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  const auto path = scratch() / name;
  write_text_file(path.string(), text);
  return path.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

int line_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("digraph text format") {
  const Digraph k2 = parse_digraph("n 2\na 0 1\na 1 0");
  CHECK(k2 == complete_symmetric(2));
  CHECK(write_digraph(k2) == "n 2\na 0 1\na 1 0\n");

  CHECK(line_of("n 3\na 0 0") == 2);
  CHECK(line_of("# header\nn 3\na 0 1\na 0 1\n") == 4);
  CHECK(line_of("n 3\na 0 3\n") == 2);
  CHECK(line_of("n 3\na 0 x\n") == 2);
  CHECK(line_of("n 3\na 0\n") == 2);
  CHECK(line_of("a 0 1\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(line_of("n 3\nb 0 1\n") == 2);
  CHECK(line_of("n 3\nS 0 1\nS 1 2\n") == 3);
  CHECK(line_of("n 3\nr 0\nr 1\n") == 3);
  CHECK(line_of("n 3\nS 0 0\n") == 2);
  CHECK(line_of("n 3\nr 0 1\n") == 2);
  CHECK(line_of("n -1\n") == 1);

  const auto file = parse_instance("# comment\nn 4\na 2 3\r\n\na 0 1\nS 2 0 1\nr 1\n");
  CHECK(file.terminals == std::vector<Vertex>{0, 1, 2});
  CHECK(file.root == 1);
  CHECK(write_instance(file) == "n 4\na 0 1\na 2 3\nS 0 1 2\nr 1\n");
}

TEST_CASE("canonical round trip over a generated corpus") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    InstanceFile file{random_digraph(n, 0.4, rng), std::nullopt, std::nullopt};
    if (n >= 2 && i % 2 == 0) {
      file.terminals = std::vector<Vertex>{0, n - 1};
      file.root = n - 1;
    }
    const std::string text = write_instance(file);
    CHECK(write_instance(parse_instance(text)) == text);
    // a shuffled, commented rendering canonicalises to the same text
    std::vector<Arc> arcs = file.graph.arcs();
    std::shuffle(arcs.begin(), arcs.end(), rng);
    std::string messy = "# shuffled\nn " + std::to_string(n) + "\n";
    for (const Arc& a : arcs) messy += "a  " + std::to_string(a.tail) + "\t" + std::to_string(a.head) + "\n";
    if (file.terminals) messy += "r " + std::to_string(*file.root) + "\nS " + std::to_string(n - 1) + " 0\n";
    CHECK(write_instance(parse_instance(messy)) == text);
  }
}

TEST_CASE("source formats") {
  const auto h = parse_hypergraph("hn 3\nhe 0 1\nhe 2 1 0\n");
  CHECK(h.n == 3);
  CHECK(h.edges == std::vector<std::vector<Vertex>>{{0, 1}, {0, 1, 2}});
  CHECK(parse_hypergraph(write_hypergraph(h)).edges == h.edges);
  CHECK_THROWS_AS(parse_hypergraph("hn 3\nhe 0\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("hn 3\nhe 0 0\n"), ParseError);

  const auto g = parse_tripartite("q 2\ne 0 2\ne 2 4\n");
  CHECK(g.q == 2);
  CHECK(write_tripartite(g) == "q 2\ne 0 2\ne 2 4\n");
  CHECK_THROWS_AS(parse_tripartite("q 2\ne 0 6\n"), ParseError);
  CHECK_THROWS_AS(parse_tripartite("q 2\ne 0 2\ne 2 0\n"), ParseError);

  const auto l = parse_linkage("n 4\na 0 1\na 1 0\nL 0 1 2 3\n");
  CHECK(l.s2 == 2);
  CHECK(write_linkage(l) == "n 4\na 0 1\na 1 0\nL 0 1 2 3\n");
  CHECK_THROWS_AS(parse_linkage("n 4\na 0 1\n"), ParseError);
}

TEST_CASE("compute examples") {
  const std::string k4 = put("k4.txt", write_digraph(complete_symmetric(4)) + "S 0 1 2\nr 0\n");
  const auto a = run({"compute", "--input", k4, "--mode", "vertex", "--json"});
  REQUIRE(a.code == kExitOk);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["value"] == 3);
  CHECK(ja["engine"] == "exact");
  CHECK(ja["certificate"].size() == 3);
  CHECK(ja["witness_set"] == std::vector<int>{0, 1, 2});

  const std::string c5 = put("c5.txt", write_digraph(directed_cycle(5)) + "S 0 2 4\nr 2\n");
  const auto b = run({"compute", "--input", c5, "--mode", "arc", "--json"});
  REQUIRE(b.code == kExitOk);
  const auto jb = nlohmann::json::parse(b.out);
  CHECK(jb["engine"] == "eulerian");
  CHECK(jb["value"] == 1);
  CHECK(jb["certificate"].size() == 1);

  const std::string glued = put("glued.txt", write_digraph(glued_cliques(4).graph));
  const auto c = run({"compute", "--input", glued, "--k", "3", "--mode", "vertex", "--json"});
  REQUIRE(c.code == kExitOk);
  CHECK(nlohmann::json::parse(c.out)["value"] == 1);

  // flags override the file
  const auto d = run({"compute", "--input", k4, "--set", "1,3", "--root", "3", "--json"});
  REQUIRE(d.code == kExitOk);
  CHECK(nlohmann::json::parse(d.out)["witness_set"] == std::vector<int>{1, 3});
  CHECK(nlohmann::json::parse(d.out)["value"] == 3);

  const auto table = run({"compute", "--input", k4, "--mode", "vertex"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("value       3") != std::string::npos);
}

TEST_CASE("threshold queries and engines") {
  const std::string k4 = put("k4t.txt", write_digraph(complete_symmetric(4)) + "S 0 1 2\nr 0\n");
  const auto yes = run({"compute", "--input", k4, "--mode", "vertex", "--l", "3", "--json"});
  CHECK(yes.code == kExitOk);
  const auto jy = nlohmann::json::parse(yes.out);
  CHECK(jy["engine"] == "symmetric");
  CHECK(jy["decision"] == true);

  const auto no = run({"compute", "--input", k4, "--mode", "vertex", "--l", "4", "--json"});
  CHECK(no.code == kExitNegative);
  CHECK(nlohmann::json::parse(no.out)["decision"] == false);

  for (const std::string engine : {"exact", "symmetric"}) {
    const auto r = run({"compute", "--input", k4, "--mode", "vertex", "--engine", engine, "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["value"] == 3);
  }
  const auto global = run({"compute", "--input", k4, "--mode", "vertex", "--k", "3", "--l", "3", "--json"});
  CHECK(global.code == kExitOk);

  const std::string path = put("path.txt", write_digraph(directed_path(3)) + "S 0 2\nr 0\n");
  CHECK(run({"compute", "--input", path, "--engine", "eulerian"}).code == kExitInput);
  CHECK(run({"compute", "--input", path, "--mode", "vertex", "--engine", "symmetric"}).code == kExitInput);
  CHECK(run({"compute", "--input", path, "--engine", "bogus"}).code == kExitInput);
  CHECK(run({"compute", "--input", path, "--l", "1"}).code == kExitOk);
  CHECK(run({"compute", "--input", path, "--l", "2"}).code == kExitNegative);
}

TEST_CASE("exit codes") {
  CHECK(run({"compute", "--input", put("loop.txt", "n 3\na 0 0\n")}).code == kExitInput);
  CHECK(run({"compute", "--input", (scratch() / "missing.txt").string()}).code == kExitInput);
  CHECK(run({"compute"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
  const std::string nos = put("nos.txt", write_digraph(complete_symmetric(3)));
  CHECK(run({"compute", "--input", nos}).code == kExitInput);
  const std::string big = put("big.txt", write_digraph(complete_symmetric(8)) + "S 0 1 2\nr 0\n");
  CHECK(run({"compute", "--input", big, "--mode", "vertex", "--budget-n", "6"}).code == kExitBudget);
  CHECK(run({"compute", "--input", big, "--k", "9"}).code == kExitInput);
  CHECK(run({"verify", "nonsense"}).code == kExitInput);
  CHECK(run({"generate", "nonsense"}).code == kExitInput);
  CHECK(run({"generate", "complete"}).code == kExitInput);
}

TEST_CASE("generate") {
  const auto prefix = (scratch() / "k5").string();
  REQUIRE(run({"generate", "complete", "--n", "5", "--out", prefix}).code == kExitOk);
  CHECK(parse_digraph(read_text_file(prefix + ".txt")) == complete_symmetric(5));
  const auto meta = nlohmann::json::parse(read_text_file(prefix + ".json"));
  for (int k = 2; k <= 5; ++k) CHECK(meta["kappa_k"][std::to_string(k)] == 4);

  const auto ng = (scratch() / "ng3").string();
  REQUIRE(run({"generate", "ng-pair", "--a", "3", "--out", ng}).code == kExitOk);
  CHECK(std::filesystem::exists(ng + ".txt"));
  CHECK(std::filesystem::exists(ng + "-complement.txt"));
  const auto ngm = nlohmann::json::parse(read_text_file(ng + ".json"));
  CHECK(ngm["lambda_k"]["3"] == 2);
  CHECK(ngm["lambda_k_complement"]["3"] == 3);

  const auto hyper = run({"generate", "hypergraph-reduce", "--edges", "0 1;1 2;0 2", "--l", "2"});
  REQUIRE(hyper.code == kExitOk);
  CHECK(hyper.out.find("\"expect\":\"below-threshold\"") != std::string::npos);
  const auto parsed = parse_instance(hyper.out);
  CHECK(parsed.terminals.has_value());

  for (const auto& name : generator_names()) {
    GenerateParams p;
    p.n = 9;
    p.t = 4;
    p.k = 3;
    p.l = 2;
    p.a = 2;
    p.q = 1;
    p.edges = "0 1;1 2";
    const std::string base = put("base.txt", write_digraph(complete_symmetric(3)) + "S 0 1 2\nr 0\n");
    const std::string link = put("link.txt", "n 4\na 0 1\na 1 0\na 2 3\na 3 2\nL 0 1 2 3\n");
    if (name == "amplify") p.input = base;
    if (name == "eulerian-reduce") p.input = link;
    const auto g = generate(name, p);
    CHECK_MESSAGE(!g.files.empty(), name);
    for (const auto& f : g.files) CHECK_NOTHROW(parse_instance(f.text));
  }
}

TEST_CASE("verify suites run clean on small parameters") {
  SuiteParams p;
  p.nmax = 4;
  p.samples = 8;
  p.kmax = 3;
  p.lmax = 2;
  p.amax = 2;
  p.exhaustive_nmax = 3;
  p.reproducer_dir.clear();
  for (const auto& name : suite_names()) {
    const auto report = run_suite(name, p);
    CHECK_MESSAGE(report.passed(), name);
    CHECK(report.cases > 0);
  }
  const auto r = run({"verify", "bounds", "--nmax", "4", "--samples", "5", "--reproducers", ""});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("auto dispatch agrees with the exact engine") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Digraph d = i % 3 == 0   ? random_eulerian(n, 3, rng)
                      : i % 3 == 1 ? random_symmetric(n, 0.6, rng)
                                   : random_digraph(n, 0.5, rng);
    for (auto mode : {Disjointness::kArc, Disjointness::kInternal}) {
      for (std::optional<int> l : {std::optional<int>{}, std::optional<int>{2}}) {
        ComputeRequest req;
        req.file = InstanceFile{d, std::vector<Vertex>{0, 1, 2}, 1};
        req.mode = mode;
        req.l = l;
        const auto fast = compute(req);
        req.engine = "exact";
        const auto exact = compute(req);
        CHECK(fast.decision == exact.decision);
        if (fast.value) CHECK(fast.value == exact.value);
      }
    }
  }
}
