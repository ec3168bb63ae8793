#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treeconn/digraph.hpp"
#include "treeconn/errors.hpp"
#include "treeconn/reductions.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn::cli {

/// Syntax or validation error at a 1-based line of the input text.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line format: '#' comments, "n <count>" first, then "a <tail> <head>",
/// optional "S <v>..." and "r <v>".
struct InstanceFile {
  Digraph graph;
  std::optional<std::vector<Vertex>> terminals;
  std::optional<Vertex> root;
};

InstanceFile parse_instance(std::string_view text);
/// Canonical text: arcs sorted, terminals ascending, no comments.
std::string write_instance(const InstanceFile& file);

Digraph parse_digraph(std::string_view text);
std::string write_digraph(const Digraph& d);

InstanceFile to_file(const SteinerInstance& inst);

/// "hn <count>" then "he <v>..." lines.
Hypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& h);

/// "q <count>" then "e <u> <v>" lines.
TripartiteInstance parse_tripartite(std::string_view text);
std::string write_tripartite(const TripartiteInstance& g);

/// A digraph file plus one "L <s1> <t1> <s2> <t2>" line.
struct LinkageFile {
  Digraph graph;
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;
};
LinkageFile parse_linkage(std::string_view text);
std::string write_linkage(const LinkageFile& file);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace treeconn::cli
