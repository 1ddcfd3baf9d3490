#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Expected invariants. Generators check every field except forest_number
// before returning; forest_number is recorded for the tests.
struct FamilyProfile {
  int n = 0;
  long m = 0;
  int girth = kInfiniteGirth;
  std::optional<int> regular_degree;
  bool connected = true;
  bool two_edge_connected = true;
  std::optional<int> forest_number;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
};

const std::vector<FamilyInfo>& family_catalog();
Graph make_family(const std::string& name, std::span<const int> params);
FamilyProfile family_profile(const std::string& name, std::span<const int> params);

Graph cube();
Graph cubes_disjoint(int k);
Graph cube_minus_edge_disjoint(int k);
Graph cubes_linked(int k);
Graph dodecahedron();
Graph dodecahedra_disjoint(int k);
Graph hosono_chain(int t);
Graph girth6_fixture();
Graph girth7_fixture();
Graph grid_quadrangulation(int p, int q);
Graph cycle_graph(int n);
Graph path_graph(int n);

// Throws FamilyError naming the first mismatching field.
void check_profile(const Graph& g, const FamilyProfile& p, const std::string& label);

}  // namespace forest
