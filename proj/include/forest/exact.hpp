#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

enum class TieBreak { canonical, lexicographic };

struct SolverConfig {
  std::uint64_t node_limit = 2'000'000'000ULL;
  double time_limit_s = 3600;
  TieBreak tie_break = TieBreak::canonical;
  int jobs = 1;
};

struct SolveResult {
  int forest_number = 0;
  int decycling_number = 0;
  VertexList witness;  // sorted vertices of a largest induced forest found
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
  bool optimal = true;  // false when a limit stopped the search
};

// Branch and bound on a shortest cycle. Order at most 256.
SolveResult forest_number_exact(const Graph& g, const SolverConfig& cfg = {});

// Descending-size enumeration; the lexicographically smallest largest forest.
// Order at most 25.
SolveResult forest_number_bruteforce(const Graph& g);

// Every induced forest of the given size (order at most 25).
std::vector<VertexList> induced_forests_of_size(const Graph& g, int size);

struct IndependentSet {
  int size = 0;
  VertexList witness;
};

// Exact independence number, order at most 64.
IndependentSet max_independent_set(const Graph& g);

}  // namespace forest
