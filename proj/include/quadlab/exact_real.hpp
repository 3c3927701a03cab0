#pragma once

#include <memory>
#include <string>

#include "quadlab/algebraic_number.hpp"
#include "quadlab/certified_interval.hpp"
#include "quadlab/rational.hpp"

namespace quadlab {

/// How a certified sign was resolved.
enum class SignMethod {
  rational,     // expression involves no radicals; evaluated exactly in Q
  interval,     // interval arithmetic separated the value from zero
  exact_field,  // exact arithmetic in the composite radical field
};

struct SignResult {
  int sign = 0;
  SignMethod method = SignMethod::rational;
  int bits_used = 0;
};

/// Exact real number represented as an arithmetic expression over rationals
/// and square roots. Immutable and cheap to copy (shared subexpressions).
///
/// sign() is certified: expressions without radicals are evaluated in exact
/// rational arithmetic; otherwise outward-rounded intervals are tried at
/// 128 bits, doubling to 2048, and only if the interval never separates from
/// zero does the exact fallback run, which rewrites the expression in the
/// tower of quadratic extensions generated by its radicands and decides the
/// sign symbolically. The fallback is total, so sign() always terminates
/// with the true sign — including exact zeroes such as sqrt(2)*sqrt(3)-sqrt(6).
class ExactReal {
 public:
  ExactReal();  // 0
  ExactReal(int n);
  ExactReal(long n);
  ExactReal(Rational r);
  ExactReal(const AlgebraicNumber& x);

  static ExactReal sqrt(const ExactReal& x);  // pre: x >= 0 (checked)

  int sign() const { return sign_detail().sign; }
  SignResult sign_detail() const;
  bool is_zero() const { return sign() == 0; }

  static int compare(const ExactReal& x, const ExactReal& y) { return (x - y).sign(); }

  CertifiedInterval interval(int precision_bits) const;
  double to_double() const;
  std::string decimal(int digits) const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator-(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
  /// Division; throws std::domain_error when the divisor is exactly zero.
  friend ExactReal operator/(const ExactReal& x, const ExactReal& y);

  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }
  ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
  ExactReal& operator/=(const ExactReal& o) { return *this = *this / o; }

  /// True when the expression contains no radicals; rational_value() is
  /// then its exact value.
  bool is_rational_expression() const;
  Rational rational_value() const;

  struct Node;

 private:
  explicit ExactReal(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

inline bool operator==(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) == 0;
}
inline bool operator!=(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) != 0;
}
inline bool operator<(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) < 0;
}
inline bool operator<=(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) <= 0;
}
inline bool operator>(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) > 0;
}
inline bool operator>=(const ExactReal& x, const ExactReal& y) {
  return ExactReal::compare(x, y) >= 0;
}

}  // namespace quadlab
