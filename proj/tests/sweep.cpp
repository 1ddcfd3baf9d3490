#include "sweep.hpp"

#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "forest/certificate.hpp"
#include "forest/families.hpp"
#include "forest/graph_io.hpp"
#include "support.hpp"

namespace testing_support {

using namespace forest;

std::vector<std::uint64_t> oracle_maximum_forests(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw std::invalid_argument("graph too large for subset enumeration");
  std::vector<std::uint64_t> best;
  int size = -1;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int c = __builtin_popcountll(mask);
    if (c < size || !oracle_acyclic(g, mask)) continue;
    if (c > size) {
      size = c;
      best.clear();
    }
    best.push_back(mask);
  }
  return best;
}

namespace {

std::uint64_t mask_of(const VertexList& vs) {
  std::uint64_t m = 0;
  for (Vertex v : vs) m |= 1ULL << v;
  return m;
}

void check_step(const Graph& g, ReductionStep step, SweepReport& rep, std::deque<std::pair<Graph, int>>& queue,
                int level, int max_order, int depth, GraphClass cls) {
  std::string key = step.rule + "/" + step.variant_label;
  auto applied = validate_step(g, cls, step);
  if (!applied) {
    rep.failures.push_back(key + ": reported as applicable but fails validation");
    return;
  }
  ++rep.steps;
  ++rep.hits[key];
  const Graph& h = applied->graph;
  for (std::uint64_t f : oracle_maximum_forests(h)) {
    VertexList fl = to_list(f, h.order());
    VertexList lifted = lift_forest(step, *applied, fl);
    ++rep.lifts;
    bool ok = std::all_of(lifted.begin(), lifted.end(), [&](Vertex v) { return v >= 0 && v < g.order(); });
    ok = ok && oracle_acyclic(g, mask_of(lifted)) &&
         static_cast<int>(lifted.size()) >= static_cast<int>(fl.size()) + step.triple.gamma;
    if (!ok) {
      std::ostringstream os;
      os << key << ": lift of a size-" << fl.size() << " forest on n=" << g.order()
         << " gives " << lifted.size() << " vertices";
      rep.failures.push_back(os.str());
      break;
    }
  }
  if (level + 1 < depth && h.order() <= max_order && h.order() > 0) queue.emplace_back(h, level + 1);
}

}  // namespace

SweepReport soundness_sweep(const std::vector<Graph>& inputs, GraphClass cls, int max_order, int depth) {
  SweepReport rep;
  std::deque<std::pair<Graph, int>> queue;
  for (const Graph& g : inputs) queue.emplace_back(g, 0);
  std::set<std::string> done;
  while (!queue.empty()) {
    auto [g, level] = queue.front();
    queue.pop_front();
    if (!done.insert(emit_graph(g)).second) continue;
    ++rep.graphs;
    std::optional<FaceSet> faces;
    if (g.has_rotation() && g.order() > 0) faces = trace_faces(g);
    std::set<std::string> seen;
    std::vector<ReductionStep> steps = find_all_applications(g, nullptr, cls);
    if (faces)
      for (ReductionStep& s : find_all_applications(g, &*faces, cls)) steps.push_back(std::move(s));
    for (ReductionStep& s : steps) {
      // The face-free pass repeats matches of the face pass.
      std::string sig = step_to_json(s).dump();
      if (!seen.insert(sig).second) continue;
      check_step(g, s, rep, queue, level, max_order, depth, cls);
    }
  }
  return rep;
}

std::vector<Graph> soundness_inputs(GraphClass cls, unsigned seed, int random_count) {
  std::vector<Graph> bases, out;
  if (cls == GraphClass::girth4) {
    out = {cube(), cubes_disjoint(2), cube_minus_edge_disjoint(2), cubes_linked(2),
           grid_quadrangulation(4, 4), grid_quadrangulation(3, 5), grid_quadrangulation(2, 8),
           grid_quadrangulation(3, 3), grid_quadrangulation(2, 5), cycle_graph(4), cycle_graph(6)};
    bases = {cube(), cubes_linked(2), cube_minus_edge_disjoint(2), grid_quadrangulation(4, 4),
             cubes_linked(3), grid_quadrangulation(5, 5)};
  } else {
    out = {cycle_graph(5), cycle_graph(7), cycle_graph(10)};
    bases = {dodecahedron(), girth6_fixture(), dodecahedra_disjoint(2)};
  }
  std::mt19937 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    Graph g = random_plane_subgraph(bases[i % bases.size()], rng, 16, 0.08);
    // Subdividing now and then adds 2-vertices next to heavy ones.
    if (i % 3 == 1 && g.order() < 16) {
      std::vector<Edge> es, br = bridges(g);
      for (Edge e : g.edges())
        if (std::find(br.begin(), br.end(), e) == br.end()) es.push_back(e);
      if (!es.empty()) {
        Edge e = es[rng() % es.size()];
        g = subdivide(g, e.first, e.second);
      }
    }
    out.push_back(std::move(g));
  }
  // Grown graphs with many chords reach the face configurations.
  for (int i = 0; i < 10 * random_count; ++i)
    out.push_back(random_girth_plane_graph(rng, 8 + i % 11, required_girth(cls) + (i % 4 == 0), 1 + i % 3,
                                           i % 2 == 0));
  return out;
}

}  // namespace testing_support
