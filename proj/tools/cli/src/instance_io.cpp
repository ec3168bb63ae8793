#include "treeconn_cli/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace treeconn::cli {

namespace {

struct Line {
  int number = 0;
  std::string key;
  std::vector<long long> values;
};

// Splits into keyed integer lines, skipping blanks and '#' comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::istringstream in{std::string(raw)};
    std::string word;
    if (!(in >> word) || word.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    Line line{number, word, {}};
    while (in >> word) {
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(number, "expected an integer, got '" + word + "'");
      }
      line.values.push_back(value);
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

void expect_count(const Line& line, std::size_t count) {
  if (line.values.size() != count) {
    throw ParseError(line.number, "'" + line.key + "' takes " + std::to_string(count) + " value(s)");
  }
}

int to_vertex(const Line& line, long long value, long long n) {
  if (value < 0 || value >= n) throw ParseError(line.number, "vertex " + std::to_string(value) + " out of range");
  return static_cast<int>(value);
}

int header_count(const std::vector<Line>& lines, const char* key, int limit = 1 << 20) {
  if (lines.empty() || lines.front().key != key) {
    throw ParseError(lines.empty() ? 1 : lines.front().number, std::string("first line must be '") + key + " <count>'");
  }
  expect_count(lines.front(), 1);
  const long long n = lines.front().values[0];
  if (n < 0 || n > limit) throw ParseError(lines.front().number, "count out of range");
  return static_cast<int>(n);
}

// Digraph lines ("a"), returning the remaining lines for the caller.
Digraph read_arcs(const std::vector<Line>& lines, int n, std::vector<const Line*>& rest) {
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.key != "a") {
      rest.push_back(&line);
      continue;
    }
    expect_count(line, 2);
    const Arc arc{to_vertex(line, line.values[0], n), to_vertex(line, line.values[1], n)};
    if (arc.tail == arc.head) throw ParseError(line.number, "loop at vertex " + std::to_string(arc.tail));
    if (!seen.insert(arc).second) throw ParseError(line.number, "duplicate arc");
    arcs.push_back(arc);
  }
  return Digraph::build(n, std::move(arcs));
}

std::string arc_lines(const Digraph& d) {
  std::vector<Arc> arcs = d.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (const Arc& a : arcs) out += "a " + std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = header_count(lines, "n");
  std::vector<const Line*> rest;
  InstanceFile file;
  file.graph = read_arcs(lines, n, rest);
  for (const Line* line : rest) {
    if (line->key == "S") {
      if (file.terminals) throw ParseError(line->number, "terminal set given twice");
      std::vector<Vertex> s;
      for (long long v : line->values) s.push_back(to_vertex(*line, v, n));
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(line->number, "repeated terminal");
      file.terminals = std::move(s);
    } else if (line->key == "r") {
      if (file.root) throw ParseError(line->number, "root given twice");
      expect_count(*line, 1);
      file.root = to_vertex(*line, line->values[0], n);
    } else if (line->key == "n") {
      throw ParseError(line->number, "vertex count given twice");
    } else {
      throw ParseError(line->number, "unknown line kind '" + line->key + "'");
    }
  }
  return file;
}

std::string write_instance(const InstanceFile& file) {
  std::string out = arc_lines(file.graph);
  if (file.terminals) {
    std::vector<Vertex> s = *file.terminals;
    std::sort(s.begin(), s.end());
    out += "S";
    for (Vertex v : s) out += " " + std::to_string(v);
    out += "\n";
  }
  if (file.root) out += "r " + std::to_string(*file.root) + "\n";
  return out;
}

Digraph parse_digraph(std::string_view text) { return parse_instance(text).graph; }

std::string write_digraph(const Digraph& d) { return arc_lines(d); }

InstanceFile to_file(const SteinerInstance& inst) { return InstanceFile{inst.graph(), inst.terminals(), inst.root()}; }

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = tokenize(text);
  Hypergraph h;
  h.n = header_count(lines, "hn", 30);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.key != "he") throw ParseError(line.number, "expected 'he <v> ...'");
    std::vector<Vertex> e;
    for (long long v : line.values) e.push_back(to_vertex(line, v, h.n));
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw ParseError(line.number, "hyperedge needs at least 2 vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line.number, "hyperedge repeats a vertex");
    h.edges.push_back(std::move(e));
  }
  return h;
}

std::string write_hypergraph(const Hypergraph& h) {
  std::string out = "hn " + std::to_string(h.n) + "\n";
  for (const auto& e : h.edges) {
    out += "he";
    for (Vertex v : e) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

TripartiteInstance parse_tripartite(std::string_view text) {
  const auto lines = tokenize(text);
  TripartiteInstance g;
  g.q = header_count(lines, "q", 1000);
  if (g.q < 1) throw ParseError(lines.front().number, "q must be at least 1");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.key != "e") throw ParseError(line.number, "expected 'e <u> <v>'");
    expect_count(line, 2);
    const Vertex u = to_vertex(line, line.values[0], 3LL * g.q);
    const Vertex v = to_vertex(line, line.values[1], 3LL * g.q);
    if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw ParseError(line.number, "duplicate edge");
    g.edges.emplace_back(u, v);
  }
  return g;
}

std::string write_tripartite(const TripartiteInstance& g) {
  std::string out = "q " + std::to_string(g.q) + "\n";
  for (auto [u, v] : g.edges) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

LinkageFile parse_linkage(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = header_count(lines, "n");
  std::vector<const Line*> rest;
  LinkageFile file;
  file.graph = read_arcs(lines, n, rest);
  bool have = false;
  for (const Line* line : rest) {
    if (line->key != "L") throw ParseError(line->number, "unknown line kind '" + line->key + "'");
    if (have) throw ParseError(line->number, "linkage terminals given twice");
    expect_count(*line, 4);
    file.s1 = to_vertex(*line, line->values[0], n);
    file.t1 = to_vertex(*line, line->values[1], n);
    file.s2 = to_vertex(*line, line->values[2], n);
    file.t2 = to_vertex(*line, line->values[3], n);
    have = true;
  }
  if (!have) throw ParseError(lines.back().number, "missing 'L <s1> <t1> <s2> <t2>' line");
  return file;
}

std::string write_linkage(const LinkageFile& file) {
  return arc_lines(file.graph) + "L " + std::to_string(file.s1) + " " + std::to_string(file.t1) + " " +
         std::to_string(file.s2) + " " + std::to_string(file.t2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace treeconn::cli
