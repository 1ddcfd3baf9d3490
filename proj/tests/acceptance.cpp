#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "forest/audit.hpp"
#include "forest/bounds.hpp"
#include "forest/exact.hpp"
#include "forest/families.hpp"
#include "forest/reducer.hpp"
#include "support.hpp"
#include "sweep.hpp"

using namespace forest;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    detail << (pass ? " | failed: " : "; ") << why;
    pass = false;
  }
};

Rational R(long long p, long long q = 1) { return Rational(p, q); }

void exact_fixtures(Outcome& o) {
  struct Case {
    std::string name;
    Graph g;
    int want;
    double limit_s;
  };
  std::vector<Case> cases{{"cube", cube(), 5, 1},
                          {"dodecahedron", dodecahedron(), 14, 1},
                          {"girth6_fixture", girth6_fixture(), 23, 30},
                          {"girth7_fixture", girth7_fixture(), 34, 120}};
  for (Case& c : cases) {
    auto t0 = Clock::now();
    SolveResult r = forest_number_exact(c.g);
    double s = seconds_since(t0);
    o.detail << c.name << "=" << r.forest_number << " in " << s << "s ";
    if (r.forest_number != c.want || !r.optimal) o.fail(c.name + " gives " + std::to_string(r.forest_number));
    if (!is_induced_forest(c.g, r.witness)) o.fail(c.name + " witness is not a forest");
    if (s >= c.limit_s) o.fail(c.name + " took " + std::to_string(s) + "s");
  }
}

void polygon_vertices_exact(Outcome& o) {
  std::vector<PolygonVertex> g4{{R(0), R(0)}, {R(3, 4), R(1, 8)}, {R(38, 44), R(7, 44)}, {R(1), R(1, 4)}};
  std::vector<PolygonVertex> g5{{R(0), R(0)}, {R(15, 16), R(3, 16)}, {R(1), R(5, 23)}};
  auto v4 = polygon_vertices(bound_polygon(GraphClass::girth4).constraints);
  auto v5 = polygon_vertices(bound_polygon(GraphClass::girth5).constraints);
  if (v4 != g4) o.fail("girth-4 vertices differ");
  if (v5 != g5) o.fail("girth-5 vertices differ");
  if (o.pass) o.detail << "girth-4 4 vertices, girth-5 3 vertices";
}

void triple_tables(Outcome& o) {
  for (GraphClass cls : {GraphClass::girth4, GraphClass::girth5}) {
    const auto& t = triple_table(cls);
    std::size_t want = cls == GraphClass::girth4 ? 15 : 18;
    if (t.size() != want) o.fail(to_string(cls) + " table has " + std::to_string(t.size()));
    int mutants_failing = 0;
    for (const TripleEntry& e : t) {
      Triple x = e.triple;
      if (!check_triple(x, bound_polygon(cls)) || !combination_proves(e))
        o.fail(to_string(cls) + " triple fails");
      if (!check_triple({x.alpha, x.beta, x.gamma - 1}, bound_polygon(cls))) ++mutants_failing;
    }
    if (mutants_failing == 0) o.fail(to_string(cls) + " mutation test: no perturbed triple fails");
    o.detail << to_string(cls) << " " << t.size() << " triples, " << mutants_failing
             << " of them fail with gamma-1; ";
  }
}

void corollaries(Outcome& o) {
  auto lf = [](Rational cn, Rational c0) { return LinearForm{cn, R(0), c0}; };
  struct Case {
    std::string id;
    int girth;
    LinearForm want;
  };
  std::vector<Case> cases{{"main", 4, lf(R(6, 11), R(7, 11))},
                          {"bmain", 5, lf(R(44, 69), R(50, 69))},
                          {"bmain", 6, lf(R(31, 46), R(30, 46))},
                          {"bmain", 7, lf(R(16, 23), R(14, 23))},
                          {"salavatipour_nm", 4, lf(R(17, 32), R(24, 32))}};
  for (const Case& c : cases) {
    LinearForm got = derive_corollary(c.id, c.girth);
    o.detail << c.id << "@" << c.girth << " -> " << got.to_string() << "; ";
    if (!(got == c.want)) o.fail(c.id + " at girth " + std::to_string(c.girth));
  }
}

void kowalik(Outcome& o) {
  for (int k = 1; k <= 10; ++k) {
    KowalikReport r = kowalik_refutation(k);
    bool ok = r.claimed == R(664 * k - 24, 128) && r.actual == 5 * k && r.margin == R(3 * (k - 1), 16);
    ok = ok && (k == 1 ? r.claimed == r.actual && !r.violated : r.claimed > r.actual && r.violated);
    ok = ok && forest_number_exact(cubes_disjoint(k)).forest_number == r.actual;
    if (!ok) o.fail("k=" + std::to_string(k));
  }
  if (o.pass) o.detail << "k=2..10 violated, k=1 equal";
}

void reduction_corpus(Outcome& o) {
  std::vector<std::pair<std::string, Graph>> g4{
      {"cube", cube()},
      {"cubes_disjoint(2)", cubes_disjoint(2)},
      {"cubes_disjoint(3)", cubes_disjoint(3)},
      {"cubes_linked(2)", cubes_linked(2)},
      {"cubes_linked(3)", cubes_linked(3)},
      {"cube_minus_edge_disjoint(2)", cube_minus_edge_disjoint(2)}};
  for (int p = 1; p <= 6; ++p)
    for (int q = p; q <= 6; ++q)
      g4.emplace_back("grid(" + std::to_string(p) + "," + std::to_string(q) + ")", grid_quadrangulation(p, q));
  // Triangle-free relatives of the Hosono chain: the ladders.
  for (int t : {6, 8, 11, 14}) g4.emplace_back("ladder(" + std::to_string(t) + ")", grid_quadrangulation(2, t + 1));
  std::vector<std::tuple<std::string, Graph, GraphClass>> all;
  for (auto& [name, g] : g4) all.emplace_back(name, g, GraphClass::girth4);
  all.emplace_back("dodecahedron", dodecahedron(), GraphClass::girth5);
  all.emplace_back("dodecahedron/girth4", dodecahedron(), GraphClass::girth4);
  int count = 0;
  double worst = 0;
  for (auto& [name, g, cls] : all)
    for (int threshold : {30, 0}) {
      ReduceOptions opts;
      opts.threshold = threshold;
      auto t0 = Clock::now();
      ForestCertificate c = reduce(g, cls, opts);
      VerificationReport rep = verify_certificate(g, c);
      double s = seconds_since(t0);
      worst = std::max(worst, s);
      ++count;
      std::string tag = name + " t=" + std::to_string(threshold);
      if (c.guarantee != Guarantee::certified) o.fail(tag + " not certified");
      if (static_cast<long long>(c.forest.size()) < ceil_of(best_bound(cls, g.order(), static_cast<long long>(g.size())).value))
        o.fail(tag + " below the bound");
      if (!rep.passed()) o.fail(tag + " fails verification");
      if (s >= 10) o.fail(tag + " took " + std::to_string(s) + "s");
    }
  if (o.pass) o.detail << count << " reductions, slowest " << worst << "s";
}

void soundness(Outcome& o) {
  for (GraphClass cls : {GraphClass::girth4, GraphClass::girth5}) {
    std::vector<Graph> in = soundness_inputs(cls);
    if (cls == GraphClass::girth5) in.push_back(dodecahedron());
    SweepReport r = soundness_sweep(in, cls);
    long variants = 0, covered = 0;
    for (const RuleSpec& rule : rule_catalog(cls))
      for (const VariantSpec& v : rule.variants) {
        ++variants;
        covered += r.hits.count(rule.id + "/" + v.label);
      }
    o.detail << to_string(cls) << ": " << r.steps << " matches, " << r.lifts << " lifts, " << covered << "/"
             << variants << " variants seen, " << r.failures.size() << " failures; ";
    for (const std::string& f : r.failures) o.fail(f);
  }
}

void audits(Outcome& o) {
  std::vector<std::pair<std::string, Graph>> fixtures{
      {"cube", cube()},           {"dodecahedron", dodecahedron()},   {"cubes_linked(2)", cubes_linked(2)},
      {"cubes_linked(3)", cubes_linked(3)}, {"grid(4,5)", grid_quadrangulation(4, 5)},
      {"girth6_fixture", girth6_fixture()}, {"girth7_fixture", girth7_fixture()}, {"cycle(9)", cycle_graph(9)}};
  for (auto& [name, g] : fixtures) {
    GraphClass mode = girth(g) >= 5 ? GraphClass::girth5 : GraphClass::girth4;
    AuditReport r = discharging_audit(g, mode);
    if (r.euler_sum != -12 || !r.identity_holds) o.fail(name + " euler sum " + std::to_string(r.euler_sum));
  }
  std::size_t c = discharging_audit(cube(), GraphClass::girth4).violations.size();
  std::size_t d = discharging_audit(dodecahedron(), GraphClass::girth5).violations.size();
  if (c != 6) o.fail("cube lists " + std::to_string(c) + " violating faces");
  if (d != 12) o.fail("dodecahedron lists " + std::to_string(d) + " violating faces");
  o.detail << fixtures.size() << " fixtures, cube " << c << ", dodecahedron " << d;
}

void oracle_agreement(Outcome& o) {
  std::mt19937 rng(99);
  std::vector<Graph> bases{cube(), dodecahedron(), girth6_fixture(), girth7_fixture(), cubes_linked(3),
                           grid_quadrangulation(5, 5), hosono_chain(9)};
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = random_plane_subgraph(bases[i % bases.size()], rng, 18, 0.0);
    int bb = forest_number_exact(g).forest_number;
    int bf = forest_number_bruteforce(g).forest_number;
    int ref = oracle_forest_number(g);
    if (bb != bf || bb != ref) ++disagreements;
  }
  o.detail << "200 subgraphs, " << disagreements << " disagreements";
  if (disagreements) o.fail(std::to_string(disagreements) + " disagreements");
}

void tightness(Outcome& o) {
  for (int t : {2, 5, 8}) {
    Graph g = hosono_chain(t);
    int want = (2 * g.order() + 2) / 3;
    int ref = oracle_forest_number(g);
    int got = forest_number_exact(g).forest_number;
    o.detail << "hosono(" << t << ") n=" << g.order() << " a=" << got << "; ";
    if (ref != want || got != want) o.fail("hosono_chain(" + std::to_string(t) + ")");
  }
  Rational b = best_bound(GraphClass::girth5, 20, 30).value;
  int a = forest_number_exact(dodecahedron()).forest_number;
  o.detail << "dodecahedron bound " << to_string(b) << " a=" << a;
  if (b != R(310, 23) || ceil_of(b) != 14 || a != 14) o.fail("dodecahedron gap");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"exact fixtures", exact_fixtures},
      {"polygon vertices", polygon_vertices_exact},
      {"triple tables", triple_tables},
      {"corollary derivation", corollaries},
      {"disjoint cube refutation", kowalik},
      {"reduction guarantee", reduction_corpus},
      {"rule soundness", soundness},
      {"audit identity", audits},
      {"oracle agreement", oracle_agreement},
      {"tightness", tightness}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail.str() << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
