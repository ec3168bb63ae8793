#pragma once

#include <random>

#include "treeconn/digraph.hpp"

namespace treeconn {

/// Each ordered pair becomes an arc independently with probability p.
Digraph random_digraph(int n, double p, std::mt19937_64& rng);

/// Each unordered pair becomes a 2-cycle with probability p.
Digraph random_symmetric(int n, double p, std::mt19937_64& rng);

/// Simple Eulerian digraph built as a union of up to `cycles` random directed
/// cycles; cycles that would repeat an arc are skipped. Redraws until the
/// non-isolated part is strongly connected.
Digraph random_eulerian(int n, int cycles, std::mt19937_64& rng);

}  // namespace treeconn
