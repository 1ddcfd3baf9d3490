#pragma once

#include <map>
#include <string>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

enum class GraphClass { girth4, girth5 };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& s);
int required_girth(GraphClass c);

struct FaceViolation {
  int face = -1;
  VertexList walk;
  int length = 0;
  int heavy = 0;     // vertices of degree >= 4 (girth4) or exactly 4 (girth5)
  int required = 0;  // quota the face misses
};

struct VertexViolation {
  Vertex vertex = -1;
  int degree = 0;
  std::string predicate;  // "degree-below-3" or "degree-above-max"
};

struct AuditReport {
  GraphClass mode = GraphClass::girth4;
  std::map<int, long> vertex_degrees;  // degree -> count
  std::map<int, long> face_lengths;    // length -> count
  long euler_sum = 0;                  // sum (2d-6) n_d + sum (l-6) k_l
  bool identity_holds = false;         // euler_sum == -12
  long charge_estimate = 0;            // 2n4+4n5-2k4-k5 or 2n4-k5
  long heavy_supply = 0;               // 4n4+5n5 or 4n4
  long heavy_demand = 0;               // 4k4+2k5 or 2k5
  std::vector<FaceViolation> violations;
  std::vector<VertexViolation> vertex_violations;
};

// Requires a connected plane graph of girth at least the mode's girth.
AuditReport discharging_audit(const Graph& g, GraphClass mode);

}  // namespace forest
