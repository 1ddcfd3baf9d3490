#include "forest/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace forest {

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

HalfPlane hp(long long ca, long long cb, long long rhs, const char* label) {
  return {R(ca), R(cb), R(rhs), label};
}

bool same_direction(const HalfPlane& h, long long ca, long long cb, long long rhs) {
  // h is a positive multiple of ca*a + cb*b <= rhs.
  Rational scale = ca != 0 ? h.ca / R(ca) : h.cb / R(cb);
  return scale > 0 && h.ca == scale * R(ca) && h.cb == scale * R(cb) && h.rhs == scale * R(rhs);
}

Polygon make_polygon(GraphClass cls, std::vector<HalfPlane> cons) {
  Polygon p;
  p.cls = cls;
  p.vertices = polygon_vertices(cons);
  p.constraints = std::move(cons);
  return p;
}

TripleEntry entry(const Polygon& p, int alpha, int beta, int gamma,
                  std::vector<Rational> multipliers) {
  TripleEntry e;
  e.triple = {alpha, beta, gamma};
  e.multipliers = std::move(multipliers);
  e.polygon = &p;
  return e;
}

std::string term(Rational c, const char* var, bool first) {
  std::string out;
  if (c == 0) return out;
  if (c < 0)
    out = first ? "-" : " - ";
  else if (!first)
    out = " + ";
  Rational mag = c < 0 ? -c : c;
  if (mag != 1) out += to_string(mag);
  out += var;
  return out;
}

}  // namespace

bool operator<(const PolygonVertex& x, const PolygonVertex& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

std::vector<PolygonVertex> polygon_vertices(std::span<const HalfPlane> cons) {
  bool lower_a = false, upper_a = false, lower_b = false;
  for (const auto& h : cons) {
    if (h.ca == 0 && h.cb == 0) throw BoundsError("degenerate constraint " + h.label);
    lower_a |= same_direction(h, -1, 0, 0);
    upper_a |= same_direction(h, 1, 0, 1);
    lower_b |= same_direction(h, 0, -1, 0);
  }
  if (!lower_a || !upper_a || !lower_b)
    throw BoundsError("constraints must include 0 <= a <= 1 and b >= 0");

  std::vector<PolygonVertex> out;
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto& p = cons[i];
      const auto& q = cons[j];
      Rational det = p.ca * q.cb - p.cb * q.ca;
      if (det == 0) continue;
      PolygonVertex v{(p.rhs * q.cb - p.cb * q.rhs) / det, (p.ca * q.rhs - p.rhs * q.ca) / det};
      bool feasible = std::all_of(cons.begin(), cons.end(), [&](const HalfPlane& h) {
        return h.ca * v.a + h.cb * v.b <= h.rhs;
      });
      if (feasible) out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw BoundsError("feasible region is empty");
  return out;
}

const Polygon& bound_polygon(GraphClass cls) {
  static const Polygon girth4 = make_polygon(
      GraphClass::girth4, {hp(-1, 0, 0, "a >= 0"), hp(1, 0, 1, "a <= 1"), hp(0, -1, 0, "b >= 0"),
                           hp(1, -6, 0, "a - 6b <= 0"), hp(3, -10, 1, "3a - 10b <= 1"),
                           hp(8, -12, 5, "8a - 12b <= 5")});
  static const Polygon girth5 = make_polygon(
      GraphClass::girth5, {hp(-1, 0, 0, "a >= 0"), hp(1, 0, 1, "a <= 1"), hp(0, -1, 0, "b >= 0"),
                           hp(1, -5, 0, "a - 5b <= 0"), hp(11, -23, 6, "11a - 23b <= 6")});
  return cls == GraphClass::girth4 ? girth4 : girth5;
}

std::string TripleEntry::combination() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (multipliers[i] != 1) out << to_string(multipliers[i]) << " * ";
    out << "(" << polygon->constraints[i].label << ")";
  }
  return out.str();
}

const std::vector<TripleEntry>& triple_table(GraphClass cls) {
  // Multipliers follow the constraint order of bound_polygon.
  static const std::vector<TripleEntry> girth4 = [] {
    const Polygon& p = bound_polygon(GraphClass::girth4);
    auto h = [](long long x) { return R(x, 2); };
    auto s = [](long long x) { return R(x, 6); };
    return std::vector<TripleEntry>{
        entry(p, 1, 6, 0, {0, 0, 0, 1, 0, 0}),
        entry(p, 2, 5, 1, {0, h(1), 0, 0, h(1), 0}),
        entry(p, 3, 5, 2, {0, h(3), 0, 0, h(1), 0}),
        entry(p, 1, 1, 1, {0, 1, 1, 0, 0, 0}),
        entry(p, 5, 9, 3, {0, h(1), 0, h(1), 0, h(1)}),
        entry(p, 6, 8, 4, {0, R(2, 3), 0, 0, 0, R(2, 3)}),
        entry(p, 4, 10, 2, {0, 1, 0, 0, 1, 0}),
        entry(p, 7, 13, 4, {0, s(1), 0, 0, s(3), s(4)}),
        entry(p, 3, 10, 1, {0, 0, 0, 0, 1, 0}),
        entry(p, 8, 12, 5, {0, 0, 0, 0, 0, 1}),
        entry(p, 6, 14, 3, {0, 0, 0, h(1), h(1), h(1)}),
        entry(p, 8, 19, 4, {0, h(1), 0, h(1), 1, h(1)}),
        entry(p, 9, 24, 4, {0, 0, 0, h(1), h(3), h(1)}),
        entry(p, 10, 23, 5, {0, s(1), 0, 0, s(9), s(4)}),
        entry(p, 9, 19, 5, {0, h(3), 0, h(1), 1, h(1)}),
    };
  }();
  static const std::vector<TripleEntry> girth5 = [] {
    const Polygon& p = bound_polygon(GraphClass::girth5);
    auto h = [](long long x) { return R(x, 2); };
    return std::vector<TripleEntry>{
        entry(p, 1, 5, 0, {0, 0, 0, 1, 0}),
        entry(p, 2, 5, 1, {0, 1, 0, 1, 0}),
        entry(p, 3, 5, 2, {0, 2, 0, 1, 0}),
        entry(p, 5, 10, 3, {0, 3, 0, 2, 0}),
        entry(p, 1, 0, 1, {0, 1, 0, 0, 0}),
        entry(p, 6, 14, 3, {0, 0, 0, h(1), h(1)}),
        entry(p, 6, 10, 4, {0, 4, 0, 2, 0}),
        entry(p, 7, 14, 4, {0, 1, 0, h(1), h(1)}),
        entry(p, 7, 10, 5, {0, 5, 0, 2, 0}),
        entry(p, 10, 15, 7, {0, 7, 0, 3, 0}),
        entry(p, 8, 14, 5, {0, 2, 0, h(1), h(1)}),
        entry(p, 10, 20, 6, {0, 6, 0, 4, 0}),
        entry(p, 11, 19, 7, {0, 4, 0, h(3), h(1)}),
        entry(p, 12, 23, 7, {0, 1, 0, 0, 1}),
        entry(p, 8, 19, 4, {0, 1, 0, h(3), h(1)}),
        entry(p, 9, 15, 6, {0, 6, 0, 3, 0}),
        entry(p, 11, 23, 6, {0, 0, 0, 0, 1}),
        entry(p, 13, 23, 8, {0, 2, 0, 0, 1}),
    };
  }();
  return cls == GraphClass::girth4 ? girth4 : girth5;
}

Rational triple_excess(const Triple& t, const Polygon& p) {
  Rational best = p.vertices.front().a * t.alpha - p.vertices.front().b * t.beta;
  for (const auto& v : p.vertices) best = std::max(best, v.a * t.alpha - v.b * t.beta);
  return best;
}

bool check_triple(const Triple& t, const Polygon& p) {
  if (t.beta < 0) throw BoundsError("beta must be nonnegative");
  return triple_excess(t, p) <= t.gamma;
}

bool combination_proves(const TripleEntry& e) {
  const auto& cons = e.polygon->constraints;
  if (e.multipliers.size() != cons.size()) return false;
  Rational ca = 0, cb = 0, rhs = 0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (e.multipliers[i] < 0) return false;
    ca += e.multipliers[i] * cons[i].ca;
    cb += e.multipliers[i] * cons[i].cb;
    rhs += e.multipliers[i] * cons[i].rhs;
  }
  return ca == e.triple.alpha && cb == -e.triple.beta && rhs <= e.triple.gamma;
}

BestBound best_bound(GraphClass cls, const Rational& n, const Rational& m) {
  if (n < 0 || m < 0) throw BoundsError("n and m must be nonnegative");
  const Polygon& p = bound_polygon(cls);
  BestBound out{p.vertices.front().a * n - p.vertices.front().b * m, p.vertices.front()};
  for (const auto& v : p.vertices) {
    Rational val = v.a * n - v.b * m;
    if (val > out.value) out = {val, v};
  }
  return out;
}

std::string LinearForm::to_string() const {
  std::string body = term(cn, "n", true);
  body += term(cm, "m", body.empty());
  if (c0 != 0 || body.empty()) {
    if (body.empty())
      body = forest::to_string(c0);
    else
      body += (c0 < 0 ? " - " : " + ") + forest::to_string(c0 < 0 ? -c0 : c0);
  }
  return body;
}

std::string to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::proved: return "proved";
    case FormulaStatus::refuted: return "refuted";
    case FormulaStatus::unproven: return "unproven";
    case FormulaStatus::construction: return "construction";
  }
  return "unknown";
}

const std::vector<Formula>& formula_catalog() {
  using K = FormulaKind;
  using S = FormulaStatus;
  auto lf = [](Rational cn, Rational cm, Rational c0) { return LinearForm{cn, cm, c0}; };
  static const std::vector<Formula> catalog = {
      {"borodin", "2n/5", "planar", K::lower, S::proved, {"n"}, {lf(R(2, 5), 0, 0)}, 3},
      {"hosono", "2n/3", "outerplanar", K::lower, S::proved, {"n"}, {lf(R(2, 3), 0, 0)}, 3},
      {"fertin_planar_upper", "ceil(n/2)", "planar", K::upper, S::construction, {"n"},
       {lf(R(1, 2), 0, 0)}, 3},
      {"fertin_girth5_lower", "n/2", "planar, girth 5 or 6", K::lower, S::proved, {"n"},
       {lf(R(1, 2), 0, 0)}, 5},
      {"fertin_girth5_upper", "7n/10 + 2", "planar, girth 5 or 6", K::upper, S::construction,
       {"n"}, {lf(R(7, 10), 0, 2)}, 5},
      {"fertin_girth7_lower", "2n/3", "planar, girth >= 7", K::lower, S::proved, {"n"},
       {lf(R(2, 3), 0, 0)}, 7},
      {"fertin_girth7_upper", "5n/6 + 1", "planar, girth >= 7", K::upper, S::construction,
       {"n"}, {lf(R(5, 6), 0, 1)}, 7},
      {"alon_nm", "n - m/4", "triangle-free", K::lower, S::proved, {"n", "m"},
       {lf(1, R(-1, 4), 0)}, 4},
      {"alon_cubic", "5n/8", "triangle-free cubic", K::lower, S::proved, {"n"},
       {lf(R(5, 8), 0, 0)}, 4},
      {"alon_degree", "alpha + (n - alpha)/(maxdeg - 1)^2", "connected", K::lower, S::proved,
       {"n", "alpha", "max_degree"}, {}, 3},
      {"salavatipour_nm", "(29n - 6m)/32", "triangle-free planar", K::lower, S::proved,
       {"n", "m"}, {lf(R(29, 32), R(-6, 32), 0)}, 4},
      {"salavatipour_n", "(17n + 24)/32", "triangle-free planar", K::lower, S::proved, {"n"},
       {lf(R(17, 32), 0, R(24, 32))}, 4},
      {"kowalik_nm", "(119n - 24m - 24)/128", "triangle-free planar", K::lower, S::refuted,
       {"n", "m"}, {lf(R(119, 128), R(-24, 128), R(-24, 128))}, 4},
      {"kowalik_n", "(71n + 72)/128", "triangle-free planar", K::lower, S::unproven, {"n"},
       {lf(R(71, 128), 0, R(72, 128))}, 4},
      {"main", "max{(38n - 7m)/44, n - m/4}", "triangle-free planar", K::lower, S::proved,
       {"n", "m"}, {lf(R(38, 44), R(-7, 44), 0), lf(1, R(-1, 4), 0)}, 4},
      {"comain", "(6n + 7)/11", "triangle-free planar", K::lower, S::proved, {"n"},
       {lf(R(6, 11), 0, R(7, 11))}, 4},
      {"bmain", "n - 5m/23", "planar, girth >= 5", K::lower, S::proved, {"n", "m"},
       {lf(1, R(-5, 23), 0)}, 5},
      {"bcomain", "(44n + 50)/69", "planar, girth >= 5", K::lower, S::proved, {"n"},
       {lf(R(44, 69), 0, R(50, 69))}, 5},
      {"bcomainbis", "n - (5n - 10)g/(23(g - 2))", "planar, girth >= g >= 5", K::lower,
       S::proved, {"n", "g"}, {}, 5},
      {"girth6_n", "(31n + 30)/46", "planar, girth >= 6", K::lower, S::proved, {"n"},
       {lf(R(31, 46), 0, R(30, 46))}, 6},
      {"girth7_n", "(16n + 14)/23", "planar, girth >= 7", K::lower, S::proved, {"n"},
       {lf(R(16, 23), 0, R(14, 23))}, 7},
      {"cubes_upper", "5n/8", "triangle-free planar (disjoint cubes)", K::upper,
       S::construction, {"n"}, {lf(R(5, 8), 0, 0)}, 4},
      {"dodecahedra_upper", "7n/10", "planar, girth 5 (disjoint dodecahedra)", K::upper,
       S::construction, {"n"}, {lf(R(7, 10), 0, 0)}, 5},
      {"girth6_upper", "23n/30", "planar, girth 6", K::upper, S::construction, {"n"},
       {lf(R(23, 30), 0, 0)}, 6},
      {"girth7_upper", "17n/21", "planar, girth 7", K::upper, S::construction, {"n"},
       {lf(R(17, 21), 0, 0)}, 7},
  };
  return catalog;
}

const Formula& find_formula(const std::string& id) {
  for (const auto& f : formula_catalog())
    if (f.id == id) return f;
  throw BoundsError("unknown formula '" + id + "'");
}

namespace {

Rational slope_factor(int g) {
  if (g < 3) throw BoundsError("girth must be at least 3");
  return R(g, g - 2);
}

LinearForm substitute(const LinearForm& f, int g) {
  if (f.cm > 0) throw BoundsError("formula increases with m");
  Rational s = slope_factor(g);
  return {f.cn + f.cm * s, 0, f.c0 - 2 * f.cm * s};
}

}  // namespace

Rational eval_formula(const std::string& id, const FormulaInputs& in) {
  const Formula& f = find_formula(id);
  if (in.n < 0 || in.m < 0) throw BoundsError("n and m must be nonnegative");
  if (id == "alon_degree") {
    if (!in.alpha || !in.max_degree) throw BoundsError("alon_degree needs alpha and max_degree");
    if (*in.max_degree < 2) throw BoundsError("alon_degree needs max_degree >= 2");
    long d = *in.max_degree - 1;
    return R(*in.alpha) + R(in.n - *in.alpha, d * d);
  }
  if (id == "bcomainbis") {
    if (!in.girth) throw BoundsError("bcomainbis needs the girth");
    if (*in.girth < 5) throw BoundsError("bcomainbis needs girth >= 5");
    // An acyclic graph takes the limit g -> infinity.
    if (*in.girth == kInfiniteGirth) return R(in.n) - R(5 * in.n - 10, 23);
    return derive_corollary("bmain", *in.girth).eval(in.n, 0);
  }
  Rational best = f.pieces.front().eval(in.n, in.m);
  for (const auto& p : f.pieces) best = std::max(best, p.eval(in.n, in.m));
  if (id == "fertin_planar_upper") best = R(ceil_of(best));
  return best;
}

LinearForm derive_corollary(const std::string& id, int g) {
  const Formula& f = find_formula(id);
  if (id == "bcomainbis") return derive_corollary("bmain", g);
  if (f.pieces.empty() || id == "fertin_planar_upper")
    throw BoundsError("formula '" + id + "' is not linear in n and m");
  LinearForm best = substitute(f.pieces.front(), g);
  for (const auto& p : f.pieces) {
    LinearForm d = substitute(p, g);
    if (d.cn > best.cn) best = d;
  }
  return best;
}

}  // namespace forest
