#include <doctest.h>

#include "forest/bounds.hpp"
#include "support.hpp"

using namespace forest;
using namespace testing_support;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

const Polygon& g4() { return bound_polygon(GraphClass::girth4); }
const Polygon& g5() { return bound_polygon(GraphClass::girth5); }

}  // namespace

TEST_CASE("rationals stay reduced with a positive denominator") {
  Rational x(6, -8);
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 4);
  CHECK(R(1, 3) + R(1, 6) == R(1, 2));
  CHECK(R(2, 3) * R(3, 4) == R(1, 2));
  CHECK(R(1, 2) / R(1, 4) == 2);
  CHECK(R(-7, 2) < R(-3));
  CHECK(to_string(R(38, 44)) == "19/22");
  CHECK(to_string(R(5)) == "5");
  CHECK(floor_of(R(-7, 2)) == -4);
  CHECK(ceil_of(R(-7, 2)) == -3);
  CHECK(ceil_of(R(310, 23)) == 14);
  CHECK(ceil_of(R(4)) == 4);
}

TEST_CASE("rational strings parse back exactly") {
  for (Rational r : {R(163, 16), R(-3, 16), R(0), R(213, 44), R(7)})
    CHECK(parse_rational(to_string(r)) == r);
  CHECK(parse_rational("38/44") == R(19, 22));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1.5"));
}

TEST_CASE("rational overflow and division by zero throw") {
  Rational big(1LL << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("polygon vertices match a pairwise-intersection reference") {
  for (const Polygon* p : {&g4(), &g5()}) {
    CHECK(p->vertices == oracle_vertices(p->constraints));
    for (std::size_t i = 1; i < p->vertices.size(); ++i) CHECK(p->vertices[i - 1] < p->vertices[i]);
  }
}

TEST_CASE("polygon vertices carry the published fractions") {
  std::vector<PolygonVertex> four{{R(0), R(0)}, {R(3, 4), R(1, 8)}, {R(38, 44), R(7, 44)}, {R(1), R(1, 4)}};
  std::vector<PolygonVertex> five{{R(0), R(0)}, {R(15, 16), R(3, 16)}, {R(1), R(5, 23)}};
  CHECK(g4().vertices == four);
  CHECK(g5().vertices == five);
}

TEST_CASE("degenerate constraint systems are rejected") {
  std::vector<HalfPlane> empty{{R(1), R(0), R(-1), "a <= -1"}, {R(-1), R(0), R(0), "a >= 0"}};
  CHECK_THROWS_AS(polygon_vertices(empty), BoundsError);
  std::vector<HalfPlane> open{{R(0), R(-1), R(0), "b >= 0"}, {R(-1), R(0), R(0), "a >= 0"}};
  CHECK_THROWS_AS(polygon_vertices(open), BoundsError);
}

TEST_CASE("triple tables pass and are tight against Fourier-Motzkin") {
  CHECK(triple_table(GraphClass::girth4).size() == 15);
  CHECK(triple_table(GraphClass::girth5).size() == 18);
  for (GraphClass cls : {GraphClass::girth4, GraphClass::girth5}) {
    const Polygon& p = bound_polygon(cls);
    for (const TripleEntry& e : triple_table(cls)) {
      const Triple t = e.triple;
      CAPTURE(t.alpha);
      CAPTURE(t.beta);
      CAPTURE(t.gamma);
      auto fm = oracle_triple_max(p.constraints, t);
      REQUIRE(fm.has_value());
      CHECK(*fm == triple_excess(t, p));
      CHECK(*fm <= t.gamma);
      CHECK(check_triple(t, p));
      CHECK(combination_proves(e));
      CHECK_FALSE(check_triple({t.alpha, t.beta, t.gamma - 1}, p));
      CHECK(e.combination().size() > 0);
    }
  }
}

TEST_CASE("combination_proves rejects wrong multipliers") {
  TripleEntry e = triple_table(GraphClass::girth5)[0];
  e.multipliers[3] = R(2);
  CHECK_FALSE(combination_proves(e));
}

TEST_CASE("best bound at the worked examples") {
  BestBound cubes = best_bound(GraphClass::girth4, 8, 12);
  CHECK(cubes.value == 5);
  BestBound linked = best_bound(GraphClass::girth4, 8, 13);
  CHECK(linked.value == R(213, 44));
  CHECK(linked.vertex == PolygonVertex{R(19, 22), R(7, 44)});
  CHECK(best_bound(GraphClass::girth4, 16, 24).value == 10);
  CHECK(best_bound(GraphClass::girth4, 16, 28).value == R(103, 11));
  BestBound dodeca = best_bound(GraphClass::girth5, 20, 30);
  CHECK(dodeca.value == R(310, 23));
  CHECK(ceil_of(dodeca.value) == 14);
}

TEST_CASE("best bound is the maximum over reference vertices") {
  for (GraphClass cls : {GraphClass::girth4, GraphClass::girth5}) {
    auto verts = oracle_vertices(bound_polygon(cls).constraints);
    for (int n = 1; n <= 40; ++n)
      for (int m = 0; m <= 2 * n; ++m) {
        Rational best = verts.front().a * n - verts.front().b * m;
        for (auto& v : verts) best = std::max(best, v.a * n - v.b * m);
        CHECK(best_bound(cls, n, m).value == best);
      }
  }
}

TEST_CASE("for triangle-free planar sizes the maximum sits on the two upper vertices") {
  for (int n = 3; n <= 60; ++n)
    for (int m = 0; m <= 2 * n - 4; ++m) {
      PolygonVertex v = best_bound(GraphClass::girth4, n, m).vertex;
      bool upper = v == PolygonVertex{R(19, 22), R(7, 44)} || v == PolygonVertex{R(1), R(1, 4)};
      CHECK(upper);
    }
  for (int n = 4; n <= 60; ++n)
    for (int m = 0; 3 * m <= 5 * n - 10; ++m) {
      PolygonVertex v = best_bound(GraphClass::girth5, n, m).vertex;
      CHECK(v == PolygonVertex{R(1), R(5, 23)});
    }
}

TEST_CASE("quadrangulations reach (6n + 7)/11 from the eighth vertex on") {
  for (int n = 8; n <= 80; ++n)
    CHECK(best_bound(GraphClass::girth4, n, 2 * n - 4).value == R(6 * n + 7, 11));
  CHECK(best_bound(GraphClass::girth4, 4, 4).value != R(31, 11));
}

TEST_CASE("formula catalog evaluates with its declared inputs") {
  FormulaInputs in;
  in.n = 8;
  in.m = 13;
  CHECK(eval_formula("main", in) == R(213, 44));
  CHECK(eval_formula("alon_nm", in) == R(19, 4));
  CHECK(eval_formula("salavatipour_nm", in) == R(29 * 8 - 78, 32));
  CHECK_THROWS_AS(eval_formula("alon_degree", in), BoundsError);
  in.alpha = 4;
  in.max_degree = 3;
  CHECK(eval_formula("alon_degree", in) == R(4) + R(4, 4));
  CHECK_THROWS_AS(eval_formula("no_such_formula", in), BoundsError);
  for (const Formula& f : formula_catalog()) CHECK_NOTHROW(find_formula(f.id));
}

TEST_CASE("corollaries follow from the face-count substitution") {
  auto lf = [](Rational cn, Rational c0) { return LinearForm{cn, R(0), c0}; };
  CHECK(derive_corollary("main", 4) == lf(R(6, 11), R(7, 11)));
  CHECK(derive_corollary("bmain", 5) == lf(R(44, 69), R(50, 69)));
  CHECK(derive_corollary("bmain", 6) == lf(R(31, 46), R(30, 46)));
  CHECK(derive_corollary("bmain", 7) == lf(R(16, 23), R(14, 23)));
  CHECK(derive_corollary("salavatipour_nm", 4) == lf(R(17, 32), R(24, 32)));
  CHECK_THROWS_AS(derive_corollary("alon_degree", 4), BoundsError);
}

TEST_CASE("derived corollaries agree with their catalogued forms") {
  FormulaInputs in;
  for (long n = 2; n <= 50; ++n) {
    in.n = n;
    CHECK(derive_corollary("main", 4).eval(n, 0) == eval_formula("comain", in));
    CHECK(derive_corollary("bmain", 5).eval(n, 0) == eval_formula("bcomain", in));
    CHECK(derive_corollary("bmain", 6).eval(n, 0) == eval_formula("girth6_n", in));
    CHECK(derive_corollary("bmain", 7).eval(n, 0) == eval_formula("girth7_n", in));
  }
}

TEST_CASE("the refuted bound overshoots k disjoint cubes") {
  for (int k = 1; k <= 10; ++k) {
    KowalikReport r = kowalik_refutation(k);
    CHECK(r.n == 8 * k);
    CHECK(r.m == 12 * k);
    CHECK(r.actual == 5 * k);
    CHECK(r.claimed == R(664 * k - 24, 128));
    CHECK(r.margin == R(3 * (k - 1), 16));
    CHECK(r.violated == (k >= 2));
  }
  CHECK(kowalik_refutation(2).claimed == R(163, 16));
  CHECK_THROWS_AS(kowalik_refutation(0), BoundsError);
}
