#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest/audit.hpp"
#include "forest/rational.hpp"

namespace forest {

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ca * a + cb * b <= rhs
struct HalfPlane {
  Rational ca, cb, rhs;
  std::string label;
};

struct PolygonVertex {
  Rational a, b;
  bool operator==(const PolygonVertex&) const = default;
};
bool operator<(const PolygonVertex& x, const PolygonVertex& y);

// Feasible (a, b) region. Both regions are unbounded only toward larger b,
// which never helps a lower bound a*n - b*m, so the vertices suffice.
struct Polygon {
  GraphClass cls;
  std::vector<HalfPlane> constraints;
  std::vector<PolygonVertex> vertices;  // sorted by (a, b)
};

// All feasible pairwise intersections, deduplicated and sorted. Throws
// BoundsError when the region is empty or not confined to 0 <= a <= 1, b >= 0.
std::vector<PolygonVertex> polygon_vertices(std::span<const HalfPlane> constraints);
const Polygon& bound_polygon(GraphClass cls);

struct Triple {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  bool operator==(const Triple&) const = default;
};

// A nonnegative combination of the polygon constraints that yields
// alpha*a - beta*b <= gamma.
struct TripleEntry {
  Triple triple;
  std::vector<Rational> multipliers;  // one per constraint of the polygon
  std::string combination() const;
  const Polygon* polygon = nullptr;
};

const std::vector<TripleEntry>& triple_table(GraphClass cls);
// max over the polygon of alpha*a - beta*b.
Rational triple_excess(const Triple& t, const Polygon& p);
bool check_triple(const Triple& t, const Polygon& p);
// True when the stored multipliers reproduce the inequality exactly.
bool combination_proves(const TripleEntry& e);

struct BestBound {
  Rational value;
  PolygonVertex vertex;
};

// max over polygon vertices of a*n - b*m; ties go to the smallest (a, b).
BestBound best_bound(GraphClass cls, const Rational& n, const Rational& m);

// cn*n + cm*m + c0
struct LinearForm {
  Rational cn, cm, c0;
  Rational eval(const Rational& n, const Rational& m) const { return cn * n + cm * m + c0; }
  bool operator==(const LinearForm&) const = default;
  std::string to_string() const;
};

enum class FormulaKind { lower, upper };
enum class FormulaStatus { proved, refuted, unproven, construction };
std::string to_string(FormulaStatus s);

struct FormulaInputs {
  long n = 0;
  long m = 0;
  std::optional<int> girth;
  std::optional<long> alpha;       // independence number
  std::optional<int> max_degree;
};

struct Formula {
  std::string id;
  std::string expression;
  std::string applies_to;
  FormulaKind kind = FormulaKind::lower;
  FormulaStatus status = FormulaStatus::proved;
  std::vector<std::string> inputs;
  std::vector<LinearForm> pieces;  // value is the max of the pieces
  int min_girth = 0;               // smallest girth the formula covers
};

const std::vector<Formula>& formula_catalog();
const Formula& find_formula(const std::string& id);
// Throws BoundsError when a required input is missing.
Rational eval_formula(const std::string& id, const FormulaInputs& in);

// Substitutes the face-count bound m <= g(n-2)/(g-2) into a formula that is
// linear and non-increasing in m. For a max of pieces, the piece with the
// largest n coefficient after substitution is returned.
LinearForm derive_corollary(const std::string& id, int g);

struct KowalikReport {
  int k = 0;
  long n = 0;
  long m = 0;
  Rational claimed;
  long actual = 0;
  bool violated = false;
  Rational margin;  // claimed - actual
};

// The claimed lower bound against the disjoint union of k cubes, whose forest
// number is k times the cube's. The cube's value is computed exactly.
KowalikReport kowalik_refutation(int k);

}  // namespace forest
