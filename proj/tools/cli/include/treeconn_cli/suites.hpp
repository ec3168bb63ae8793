#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace treeconn::cli {

struct SuiteParams {
  int nmax = 5;
  /// Random graphs (or source instances per reduction) to draw.
  int samples = 200;
  std::uint64_t seed = 1;
  int kmax = 4;
  int lmax = 3;
  int amax = 3;
  /// symmetric-agreement: every labelled symmetric digraph up to this order.
  int exhaustive_nmax = 4;
  /// Reproducer files for violations go here; empty means do not write.
  std::string reproducer_dir = ".";
};

struct Violation {
  std::string what;
  std::string instance_text;
  std::string file;  // where the reproducer was written, if anywhere
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::map<std::string, std::size_t> tallies;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

std::vector<std::string> suite_names();

/// Throws InputError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace treeconn::cli
