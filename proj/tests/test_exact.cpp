#include <doctest.h>

#include <random>

#include "forest/exact.hpp"
#include "forest/families.hpp"
#include "support.hpp"

using namespace forest;
using namespace testing_support;

TEST_CASE("exact solver on small families") {
  CHECK(forest_number_exact(cube()).forest_number == 5);
  CHECK(forest_number_exact(dodecahedron()).forest_number == 14);
  CHECK(forest_number_exact(cycle_graph(9)).forest_number == 8);
  CHECK(forest_number_exact(path_graph(7)).forest_number == 7);
  CHECK(forest_number_exact(Graph(0)).forest_number == 0);
  SolveResult r = forest_number_exact(cubes_disjoint(2));
  CHECK(r.forest_number == 10);
  CHECK(r.decycling_number == 6);
  CHECK(r.optimal);
  CHECK(is_induced_forest(cubes_disjoint(2), r.witness));
}

TEST_CASE("branch and bound matches brute force on random plane subgraphs") {
  std::mt19937 rng(2024);
  const std::vector<Graph> bases{cube(), dodecahedron(), cubes_linked(2), grid_quadrangulation(4, 4),
                                 girth6_fixture(), hosono_chain(8)};
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_plane_subgraph(bases[trial % bases.size()], rng, 16, 0.05);
    int want = oracle_forest_number(g);
    SolveResult bb = forest_number_exact(g);
    SolveResult bf = forest_number_bruteforce(g);
    CHECK(bb.forest_number == want);
    CHECK(bf.forest_number == want);
    CHECK(static_cast<int>(bb.witness.size()) == want);
    CHECK(is_induced_forest(g, bb.witness));
    CHECK(bb.decycling_number == g.order() - want);
  }
}

TEST_CASE("parallel search agrees with the sequential one") {
  SolverConfig cfg;
  cfg.jobs = 4;
  for (const Graph& g : {dodecahedron(), cubes_linked(3), grid_quadrangulation(5, 5)}) {
    SolveResult seq = forest_number_exact(g);
    SolveResult par = forest_number_exact(g, cfg);
    CHECK(par.forest_number == seq.forest_number);
    CHECK(par.witness == seq.witness);
  }
}

TEST_CASE("witnesses are deterministic") {
  Graph g = grid_quadrangulation(4, 5);
  CHECK(forest_number_exact(g).witness == forest_number_exact(g).witness);
  SolveResult bf = forest_number_bruteforce(cube());
  // The lexicographically smallest largest forest of the cube.
  for (const VertexList& f : induced_forests_of_size(cube(), 5)) CHECK_FALSE(f < bf.witness);
}

TEST_CASE("a node limit stops the search early") {
  SolverConfig cfg;
  cfg.node_limit = 3;
  SolveResult r = forest_number_exact(girth6_fixture(), cfg);
  CHECK_FALSE(r.optimal);
  CHECK(is_induced_forest(girth6_fixture(), r.witness));
}

TEST_CASE("enumerating induced forests of a given size") {
  Graph c = cycle_graph(5);
  CHECK(induced_forests_of_size(c, 4).size() == 5);
  CHECK(induced_forests_of_size(c, 5).empty());
  auto cubes = induced_forests_of_size(cube(), 5);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < 256; ++mask)
    if (__builtin_popcountll(mask) == 5 && oracle_acyclic(cube(), mask)) ++count;
  CHECK(cubes.size() == count);
}

TEST_CASE("independence numbers") {
  CHECK(max_independent_set(cube()).size == 4);
  CHECK(max_independent_set(dodecahedron()).size == 8);
  CHECK(max_independent_set(cycle_graph(7)).size == 3);
  IndependentSet s = max_independent_set(grid_quadrangulation(3, 3));
  CHECK(s.size == 5);
  for (Vertex a : s.witness)
    for (Vertex b : s.witness) CHECK_FALSE(grid_quadrangulation(3, 3).has_edge(a, b));
}
