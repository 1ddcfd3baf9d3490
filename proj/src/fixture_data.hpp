#pragma once

#include <vector>

#include "forest/graph.hpp"

namespace forest::fixture_data {

// Plane drawings transcribed vertex by vertex; rotations clockwise.
struct FixtureData {
  int n;
  std::vector<Edge> edges;
  std::vector<VertexList> rotation;
  Dart outer;
};

const FixtureData& girth6();
const FixtureData& girth7();

}  // namespace forest::fixture_data
