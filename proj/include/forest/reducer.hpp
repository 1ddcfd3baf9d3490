#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest/audit.hpp"
#include "forest/bounds.hpp"
#include "forest/embedding.hpp"
#include "forest/exact.hpp"
#include "forest/graph.hpp"

namespace forest {

class ReducerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VariantSpec {
  std::string label;
  Triple triple;
  // The cycle base case removes a whole n-cycle: (n, n, n - 1). `triple`
  // then holds the smallest cycle of the class.
  bool scales_with_order = false;
};

struct RuleSpec {
  std::string id;
  GraphClass cls = GraphClass::girth4;
  bool needs_embedding = false;
  std::string configuration;
  std::vector<VariantSpec> variants;
};

// Rules in the order they are tried.
const std::vector<RuleSpec>& rule_catalog(GraphClass cls);
const RuleSpec& find_rule(GraphClass cls, const std::string& id);

// Vertex ids below refer to the graph the step applies to.
struct AddedEdge {
  Vertex u = 0;
  Vertex v = 0;
  // Deleted vertices that stand in for the edge when lifting: a tree with
  // exactly one edge to u and one to v.
  VertexList part;
};

struct Apex {
  VertexList neighbors;      // surviving vertices
  std::vector<int> apexes;   // earlier apexes it is joined to
  // Deleted vertices lifted in place of the apex when it is in the forest:
  // a tree with exactly one edge to each neighbour.
  VertexList part;
};

struct Surgery {
  VertexList deleted;  // sorted
  std::vector<AddedEdge> added_edges;
  std::vector<Apex> apexes;
  VertexList base;  // lifted unconditionally, sorted
};

struct ReductionStep {
  std::string rule;
  int variant = 0;
  std::string variant_label;
  Triple triple;
  VertexList match;  // the configuration's role tuple
  Surgery surgery;
  long edges_removed = 0;  // m - m'
};

struct AppliedStep {
  Graph graph;
  // Surviving vertices of the pre-state, in order, then the apexes.
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;  // -1 for apexes
};

// Builds H*. Throws ReducerError when the surgery cannot be embedded or its
// arithmetic does not match the triple.
AppliedStep apply_step(const Graph& g, const ReductionStep& step);

// Pulls a forest of H* (ids of H*) back to g.
VertexList lift_forest(const ReductionStep& step, const AppliedStep& applied,
                       const VertexList& forest_of_h);

// Checks a candidate on g: order and size drop, girth of H*, planarity of the
// new rotation, and that lifting any induced forest of H* yields an induced
// forest of g with gamma more vertices. Fills edges_removed on success.
std::optional<AppliedStep> validate_step(const Graph& g, GraphClass cls, ReductionStep& step);

// First applicable rule; within a rule the smallest (variant, match) pair.
// Rules that read faces are skipped when `faces` is null.
std::optional<ReductionStep> find_application(const Graph& g, const FaceSet* faces,
                                              GraphClass cls);
// Every valid application of every rule.
std::vector<ReductionStep> find_all_applications(const Graph& g, const FaceSet* faces,
                                                 GraphClass cls);
// Unvalidated candidates of one rule, for diagnostics and tests.
std::vector<ReductionStep> rule_candidates(const std::string& rule, const Graph& g,
                                           const FaceSet* faces, GraphClass cls);

enum class Guarantee { certified, heuristic };
std::string to_string(Guarantee g);

struct TraceNode {
  enum class Kind { split, bridge, step, greedy, leaf };
  Kind kind = Kind::leaf;
  VertexList ids;  // global id of every vertex of this node's graph
  long n = 0;
  long m = 0;
  VertexList forest;  // global ids, sorted
  std::vector<TraceNode> children;
  Edge removed_edge{-1, -1};  // bridge, local ids
  Vertex removed_vertex = -1;  // greedy, local id
  std::optional<ReductionStep> step;  // local ids
  VertexList apex_ids;  // global ids given to the apexes of `step`
  std::string method;   // leaf: empty, acyclic or exact
};
std::string to_string(TraceNode::Kind k);

struct ReduceOptions {
  int threshold = 30;
  SolverConfig solver;
};

struct ForestCertificate {
  GraphClass cls = GraphClass::girth4;
  long n = 0;
  long m = 0;
  int threshold = 30;
  VertexList forest;  // sorted
  Rational claimed;   // best bound of the class at (n, m)
  PolygonVertex bound_vertex;
  Guarantee guarantee = Guarantee::certified;
  TraceNode trace;
  std::vector<std::string> diagnostics;
};

// Requires girth at least that of the class.
ForestCertificate reduce(const Graph& g, GraphClass cls, const ReduceOptions& opts = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Re-checks the forest and bound, and replays the whole trace on g.
VerificationReport verify_certificate(const Graph& g, const ForestCertificate& c);

}  // namespace forest
