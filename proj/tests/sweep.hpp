#pragma once

#include <map>
#include <string>
#include <vector>

#include "forest/reducer.hpp"

namespace testing_support {

struct SweepReport {
  long graphs = 0;
  long steps = 0;
  long lifts = 0;
  std::vector<std::string> failures;
  std::map<std::string, long> hits;  // "rule/variant" -> matches checked
};

// Every valid application on every input (with and without faces) and on the
// H* graphs they produce, down to `depth` levels. Each maximum forest of H*,
// found by exhaustive search, must lift to an induced forest of the input
// with gamma more vertices.
SweepReport soundness_sweep(const std::vector<forest::Graph>& inputs, forest::GraphClass cls,
                            int max_order = 16, int depth = 2);

// Every maximum induced forest, by enumerating all subsets.
std::vector<std::uint64_t> oracle_maximum_forests(const forest::Graph& g);

std::vector<forest::Graph> soundness_inputs(forest::GraphClass cls, unsigned seed = 7,
                                            int random_count = 40);

}  // namespace testing_support
