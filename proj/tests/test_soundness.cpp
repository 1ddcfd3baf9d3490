#include <doctest.h>

#include <iostream>

#include "forest/exact.hpp"
#include "forest/families.hpp"
#include "support.hpp"
#include "sweep.hpp"

using namespace forest;
using namespace testing_support;

namespace {

void print_coverage(GraphClass cls, const SweepReport& r) {
  std::cout << to_string(cls) << ": " << r.graphs << " graphs, " << r.steps << " matches, " << r.lifts
            << " lifts\n";
  for (const RuleSpec& rule : rule_catalog(cls))
    for (const VariantSpec& v : rule.variants) {
      auto it = r.hits.find(rule.id + "/" + v.label);
      std::cout << "  " << rule.id << "/" << v.label << ": " << (it == r.hits.end() ? 0 : it->second)
                << "\n";
    }
}

}  // namespace

TEST_CASE("exhaustive maximum forests agree with the exact solver") {
  for (const Graph& g : {cube(), cycle_graph(6), grid_quadrangulation(3, 4)}) {
    auto all = oracle_maximum_forests(g);
    REQUIRE_FALSE(all.empty());
    CHECK(__builtin_popcountll(all.front()) == forest_number_exact(g).forest_number);
    CHECK(all.size() == induced_forests_of_size(g, forest_number_exact(g).forest_number).size());
  }
}

TEST_CASE("every girth-4 match lifts every maximum forest") {
  SweepReport r = soundness_sweep(soundness_inputs(GraphClass::girth4), GraphClass::girth4);
  print_coverage(GraphClass::girth4, r);
  for (const std::string& f : r.failures) FAIL_CHECK(f);
  CHECK(r.steps > 100);
}

TEST_CASE("every girth-5 match lifts every maximum forest") {
  std::vector<Graph> in = soundness_inputs(GraphClass::girth5);
  in.push_back(dodecahedron());
  SweepReport r = soundness_sweep(in, GraphClass::girth5);
  print_coverage(GraphClass::girth5, r);
  for (const std::string& f : r.failures) FAIL_CHECK(f);
  CHECK(r.steps > 20);
}
