#pragma once

#include <compare>
#include <numeric>

#include "core/errors.hpp"

namespace surfcalc {

// Exact rational over 64-bit integers, always normalized (gcd 1, positive
// denominator).  Boost 1.74's rational recurses infinitely under the
// C++20 rewritten comparison operators, so this minimal type stands in.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

private:
  void normalize() {
    if (den_ == 0) fail(Errc::out_of_range, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

} // namespace surfcalc
