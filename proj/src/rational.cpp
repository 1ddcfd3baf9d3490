#include "forest/rational.hpp"

#include <limits>
#include <numeric>

namespace forest {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_wide(__int128 p, __int128 q) {
  if (q == 0) throw std::domain_error("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  __int128 g = gcd_wide(p, q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  constexpr auto lo = std::numeric_limits<long long>::min() + 1;
  constexpr auto hi = std::numeric_limits<long long>::max();
  if (p < lo || p > hi || q > hi) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<long long>(p);
  r.den_ = static_cast<long long>(q);
  return r;
}

void Rational::assign(long long p, long long q) { *this = from_wide(p, q); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long p = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(p);
    }
    std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    long long p = std::stoll(ps, &used);
    if (used != ps.size()) throw std::invalid_argument(s);
    long long q = std::stoll(qs, &used);
    if (used != qs.size() || q == 0) throw std::invalid_argument(s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a fraction: '" + s + "'");
  }
}

long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

long long ceil_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace forest
