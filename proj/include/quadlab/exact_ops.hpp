#pragma once

#include <vector>

#include "quadlab/algebraic_number.hpp"
#include "quadlab/exact_real.hpp"

namespace quadlab {

/// Root set of A x^2 + B x + C = 0 over the reals, with exact coefficients.
struct QuadraticRoots {
  enum class Kind {
    two_roots,         // A != 0, positive discriminant
    double_root,       // A != 0, zero discriminant
    one_root,          // A = 0, B != 0
    none,              // A = 0 = B, C != 0, or negative discriminant
    identically_zero,  // A = B = C = 0: every x solves the equation
  };

  Kind kind = Kind::none;
  std::vector<AlgebraicNumber> roots;  // ascending; empty for none/identically_zero
  Rational discriminant;               // B^2 - 4AC (meaningful when A != 0)

  bool is_identically_zero() const { return kind == Kind::identically_zero; }
};

QuadraticRoots solve_quadratic_exact(const Rational& A, const Rational& B, const Rational& C);

/// Exact sign of a quadratic-field value, computed symbolically.
int certified_sign(const AlgebraicNumber& x);

/// Certified sign of an arbitrary radical expression: interval ladder first
/// (128 -> 2048 bits), exact composite-field arithmetic as the fallback.
int certified_sign(const ExactReal& x);
SignResult certified_sign_detail(const ExactReal& x);

/// Exact three-way comparison across radicands: sign(u - v).
int certified_compare(const AlgebraicNumber& u, const AlgebraicNumber& v);

/// Exact sign of the product u * v (radicands may differ).
int certified_sign_product(const AlgebraicNumber& u, const AlgebraicNumber& v);

}  // namespace quadlab
