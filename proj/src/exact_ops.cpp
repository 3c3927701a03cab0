#include "quadlab/exact_ops.hpp"

namespace quadlab {

QuadraticRoots solve_quadratic_exact(const Rational& A, const Rational& B, const Rational& C) {
  QuadraticRoots out;
  if (A.is_zero()) {
    if (B.is_zero()) {
      out.kind = C.is_zero() ? QuadraticRoots::Kind::identically_zero
                             : QuadraticRoots::Kind::none;
      return out;
    }
    out.kind = QuadraticRoots::Kind::one_root;
    out.roots.emplace_back(-C / B);
    return out;
  }
  Rational disc = B * B - Rational(4) * A * C;
  out.discriminant = disc;
  int ds = disc.sign();
  if (ds < 0) {
    out.kind = QuadraticRoots::Kind::none;
    return out;
  }
  Rational half = Rational(1) / (Rational(2) * A);
  if (ds == 0) {
    out.kind = QuadraticRoots::Kind::double_root;
    out.roots.emplace_back(-B * half);
    return out;
  }
  out.kind = QuadraticRoots::Kind::two_roots;
  // (-B +- sqrt(disc)) / 2A; AlgebraicNumber normalizes square discriminants
  // to plain rationals.
  AlgebraicNumber r1(-B * half, -half, disc);
  AlgebraicNumber r2(-B * half, half, disc);
  if (r2 < r1) std::swap(r1, r2);
  out.roots.push_back(std::move(r1));
  out.roots.push_back(std::move(r2));
  return out;
}

int certified_sign(const AlgebraicNumber& x) { return x.sign(); }

int certified_sign(const ExactReal& x) { return x.sign(); }

SignResult certified_sign_detail(const ExactReal& x) { return x.sign_detail(); }

int certified_compare(const AlgebraicNumber& u, const AlgebraicNumber& v) {
  // Shared (or rational) radicands stay symbolic; mixed radicands take the
  // interval-then-exact ladder.
  if (u.is_rational() || v.is_rational() || u.d() == v.d()) return (u - v).sign();
  return certified_sign(ExactReal(u) - ExactReal(v));
}

int certified_sign_product(const AlgebraicNumber& u, const AlgebraicNumber& v) {
  return u.sign() * v.sign();
}

}  // namespace quadlab
