#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "forest/reducer.hpp"

namespace forest::rules {

struct Context {
  const Graph& g;
  const FaceSet* faces;
  GraphClass cls;
};

// Collects candidates of one rule. Candidates whose role vertices are missing
// (-1) or repeat inside the deleted set are dropped here; everything else is
// left to validate_step.
class Emitter {
 public:
  Emitter(const RuleSpec& spec, std::vector<ReductionStep>& out) : spec_(spec), out_(out) {}

  void emit(int variant, VertexList match, VertexList deleted, VertexList base,
            std::vector<AddedEdge> edges = {}, std::vector<Apex> apexes = {});
  // For the cycle base case, whose triple depends on the order.
  void emit_scaled(int variant, Triple t, VertexList match, VertexList deleted, VertexList base);

 private:
  const RuleSpec& spec_;
  std::vector<ReductionStep>& out_;
};

using Generator = std::function<void(const Context&, Emitter&)>;

struct RuleImpl {
  RuleSpec spec;
  Generator generate;
};

const std::vector<RuleImpl>& girth4_rules();
const std::vector<RuleImpl>& girth5_rules();

// Shared configuration helpers.
bool in(std::initializer_list<Vertex> set, Vertex v);
// The neighbour of a 3-vertex v outside {a, b}; -1 unless deg(v) == 3.
Vertex third(const Graph& g, Vertex v, Vertex a, Vertex b);
VertexList others(const Graph& g, Vertex v, std::initializer_list<Vertex> excluded);
VertexList common(const Graph& g, Vertex a, Vertex b, std::initializer_list<Vertex> excluded);
// Each cycle of the given length once, as a vertex sequence.
std::vector<VertexList> cycles_of_length(const Graph& g, int length);
// Facial walks of the given length with distinct vertices.
std::vector<VertexList> faces_of_length(const FaceSet& faces, int length);
// All rotations and reflections of a cyclic sequence.
std::vector<VertexList> orientations(const VertexList& cycle);
bool separating(const Graph& g, const FaceSet& faces, const VertexList& cycle);
bool all_degree(const Graph& g, const VertexList& vs, int d);
// Emits the cycle base case when g is a connected 2-regular graph.
void emit_cycle_case(const Context& c, Emitter& e, int variant);
// Two apexes for a facial 5-cycle: x on u0, u1; y on u2, u3 and x.
void emit_pentagon_apexes(Emitter& e, int variant, const VertexList& v, const VertexList& u);

}  // namespace forest::rules
