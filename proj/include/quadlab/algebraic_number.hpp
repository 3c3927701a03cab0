#pragma once

#include <iosfwd>
#include <string>

#include "quadlab/rational.hpp"

namespace quadlab {

/// Exact real of the form a + b*sqrt(d) with rational a, b and radicand d >= 0.
///
/// Normal form: whenever the value is rational (b = 0, d = 0, or d a perfect
/// rational square) it is stored as (a, 0, 0). Consequently d is never a
/// perfect square when b != 0, which makes the field inverse well defined.
/// Arithmetic is exact and closed for operands sharing a radicand (values
/// with d = 0 mix with anything); combining two irrational values over
/// different radicands throws — cross-field comparisons go through
/// certified_sign instead.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : a_(0), b_(0), d_(0) {}
  AlgebraicNumber(Rational rational) : a_(std::move(rational)), b_(0), d_(0) {}
  AlgebraicNumber(int n) : a_(n), b_(0), d_(0) {}
  AlgebraicNumber(Rational a, Rational b, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  /// Valid only when is_rational().
  const Rational& rational_value() const;

  /// Exact sign, computed symbolically within the field.
  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  double to_double() const;
  std::string str() const;
  std::string decimal(int digits) const;

  AlgebraicNumber operator-() const { return AlgebraicNumber(-a_, -b_, d_); }
  friend AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator-(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y);
  friend AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y);

  AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
  AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

  /// Exact structural equality (well defined thanks to the normal form:
  /// equal values over one field have identical components).
  friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    return !(x == y);
  }

  /// Exact order comparison; requires a shared radicand (or rational sides).
  friend bool operator<(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const AlgebraicNumber& x, const AlgebraicNumber& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const AlgebraicNumber& x, const AlgebraicNumber& y) { return y < x; }
  friend bool operator>=(const AlgebraicNumber& x, const AlgebraicNumber& y) { return y <= x; }

  friend std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x);

 private:
  // Fields share a radicand if either side is rational or both radicands
  // match exactly; helper aligns the pair or throws.
  static Rational common_radicand(const AlgebraicNumber& x, const AlgebraicNumber& y);

  Rational a_, b_, d_;
};

}  // namespace quadlab
