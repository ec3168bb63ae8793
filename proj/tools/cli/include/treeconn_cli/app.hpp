#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeconn/packing_exact.hpp"
#include "treeconn/steiner.hpp"
#include "treeconn_cli/instance_io.hpp"

namespace treeconn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInput = 2,
  kExitBudget = 3,
  kExitVerification = 4,
};

/// A certificate failed the independent checker, or two engines disagreed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComputeRequest {
  InstanceFile file;
  // Flags override what the file says.
  std::optional<std::vector<Vertex>> terminals;
  std::optional<Vertex> root;
  Disjointness mode = Disjointness::kArc;
  std::optional<int> k;  // global parameter over all k-subsets
  std::optional<int> l;  // threshold query
  std::string engine = "auto";
  ExactBudget budget;
};

struct ComputeReport {
  std::string engine;  // the engine that actually ran
  Disjointness mode = Disjointness::kArc;
  std::optional<int> value;
  std::optional<int> threshold;
  std::optional<bool> decision;
  std::optional<TreePacking> certificate;  // always re-validated against witness_set/witness_root
  std::vector<Vertex> witness_set;
  Vertex witness_root = 0;
  std::optional<int> k;
  double seconds = 0;
};

/// Throws InputError, BudgetExceeded or VerificationFailure.
ComputeReport compute(const ComputeRequest& request);

nlohmann::json to_json(const ComputeReport& report, const Digraph& graph);

struct GenerateParams {
  std::optional<int> n, t, k, l, a, q, cycles, hn;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::optional<std::string> edges;  // "0 1;1 2;0 2"
  std::optional<std::string> input;  // source file for reductions
  Disjointness mode = Disjointness::kInternal;
};

struct GeneratedFile {
  std::string suffix;  // appended to the output prefix, e.g. "" or "-complement"
  std::string text;
};

struct Generated {
  std::vector<GeneratedFile> files;
  nlohmann::json metadata;
};

std::vector<std::string> generator_names();

/// Throws InputError for an unknown name or bad parameters.
Generated generate(const std::string& name, const GenerateParams& params);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeconn::cli
