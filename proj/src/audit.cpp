#include "forest/audit.hpp"

#include "forest/embedding.hpp"

namespace forest {

std::string to_string(GraphClass c) { return c == GraphClass::girth4 ? "girth4" : "girth5"; }

GraphClass parse_graph_class(const std::string& s) {
  if (s == "girth4") return GraphClass::girth4;
  if (s == "girth5") return GraphClass::girth5;
  throw std::invalid_argument("unknown graph class '" + s + "' (expected girth4 or girth5)");
}

int required_girth(GraphClass c) { return c == GraphClass::girth4 ? 4 : 5; }

AuditReport discharging_audit(const Graph& g, GraphClass mode) {
  if (!is_connected(g) || g.order() == 0) throw GraphError("audit needs a connected graph");
  if (girth(g) < required_girth(mode))
    throw GraphError("graph girth is below " + std::to_string(required_girth(mode)));
  FaceSet fs = trace_faces(g);

  AuditReport r;
  r.mode = mode;
  long n4 = 0, n5 = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    r.vertex_degrees[d] += 1;
    r.euler_sum += 2L * d - 6;
    if (d == 4) ++n4;
    if (d == 5) ++n5;
    if (d < 3) r.vertex_violations.push_back({v, d, "degree-below-3"});
    int cap = mode == GraphClass::girth4 ? 5 : 4;
    if (d > cap) r.vertex_violations.push_back({v, d, "degree-above-max"});
  }
  long k4 = 0, k5 = 0;
  for (int f = 0; f < static_cast<int>(fs.count()); ++f) {
    const auto& walk = fs.walks[f];
    int len = static_cast<int>(walk.size());
    r.face_lengths[len] += 1;
    r.euler_sum += len - 6;
    if (len == 4) ++k4;
    if (len == 5) ++k5;
    int heavy = 0;
    for (Vertex v : walk) {
      int d = g.degree(v);
      heavy += mode == GraphClass::girth4 ? (d >= 4) : (d == 4);
    }
    int required = 0;
    if (mode == GraphClass::girth4) required = len == 4 ? 4 : len == 5 ? 2 : 0;
    else required = len == 5 ? 2 : 0;
    if (heavy < required) r.violations.push_back({f, walk, len, heavy, required});
  }
  r.identity_holds = r.euler_sum == -12;
  if (mode == GraphClass::girth4) {
    r.charge_estimate = 2 * n4 + 4 * n5 - 2 * k4 - k5;
    r.heavy_supply = 4 * n4 + 5 * n5;
    r.heavy_demand = 4 * k4 + 2 * k5;
  } else {
    r.charge_estimate = 2 * n4 - k5;
    r.heavy_supply = 4 * n4;
    r.heavy_demand = 2 * k5;
  }
  return r;
}

}  // namespace forest
