#include "forest/bounds.hpp"
#include "forest/exact.hpp"
#include "forest/families.hpp"

namespace forest {

KowalikReport kowalik_refutation(int k) {
  if (k < 1) throw BoundsError("k must be at least 1");
  static const int cube_value = forest_number_exact(cube()).forest_number;
  KowalikReport r;
  r.k = k;
  r.n = 8L * k;
  r.m = 12L * k;
  FormulaInputs in;
  in.n = r.n;
  in.m = r.m;
  r.claimed = eval_formula("kowalik_nm", in);
  r.actual = static_cast<long>(cube_value) * k;
  r.violated = r.claimed > r.actual;
  r.margin = r.claimed - Rational(r.actual);
  return r;
}

}  // namespace forest
