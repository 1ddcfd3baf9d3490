#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace forest {

// Exact fraction over long long, always reduced with a positive denominator.
// Arithmetic runs in 128 bits and throws std::overflow_error when the reduced
// result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long p) : num_(p) {}  // NOLINT(google-explicit-constructor)
  Rational(long long p, long long q) { assign(p, q); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }
  friend Rational operator+(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                     static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("division by zero");
    return from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    auto l = static_cast<__int128>(x.num_) * y.den_;
    auto r = static_cast<__int128>(y.num_) * x.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Rational from_wide(__int128 p, __int128 q);
  void assign(long long p, long long q);
  long long num_ = 0;
  long long den_ = 1;
};

// Reduced "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);
// Accepts "p", "p/q" and "-p/q".
Rational parse_rational(const std::string& s);
long long floor_of(const Rational& r);
long long ceil_of(const Rational& r);

}  // namespace forest
