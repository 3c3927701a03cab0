#include "quadlab/algebraic_number.hpp"

#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quadlab {

AlgebraicNumber::AlgebraicNumber(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_.sign() < 0) throw std::domain_error("AlgebraicNumber: negative radicand");
  if (b_.is_zero() || d_.is_zero()) {
    b_ = Rational(0);
    d_ = Rational(0);
    return;
  }
  if (auto r = d_.sqrt_if_square()) {
    a_ += b_ * *r;
    b_ = Rational(0);
    d_ = Rational(0);
  }
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("AlgebraicNumber: not rational");
  return a_;
}

int AlgebraicNumber::sign() const {
  if (b_.is_zero()) return a_.sign();
  if (a_.is_zero()) return b_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa == sb) return sa;
  // Signs differ: compare |a| with |b|*sqrt(d) via squares.
  return sa * (a_ * a_ - b_ * b_ * d_).sign();
}

double AlgebraicNumber::to_double() const {
  if (is_rational()) return a_.to_double();
  return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

std::string AlgebraicNumber::str() const {
  std::ostringstream os;
  os << a_.str();
  if (!b_.is_zero()) os << " + " << b_.str() << "*sqrt(" << d_.str() << ")";
  return os.str();
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (is_rational()) return a_.decimal(digits);
  mpfr_prec_t prec = digits * 4 + 96;
  mpfr_t acc, bb, dd;
  mpfr_init2(acc, prec);
  mpfr_init2(bb, prec);
  mpfr_init2(dd, prec);
  mpfr_set_q(acc, a_.mpq().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(bb, b_.mpq().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(dd, d_.mpq().get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(dd, dd, MPFR_RNDN);
  mpfr_fma(acc, bb, dd, acc, MPFR_RNDN);
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, acc);
  std::string s(out);
  mpfr_free_str(out);
  mpfr_clear(acc);
  mpfr_clear(bb);
  mpfr_clear(dd);
  return s;
}

Rational AlgebraicNumber::common_radicand(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  if (x.d_ == y.d_) return x.d_;
  throw std::domain_error("AlgebraicNumber: mixed radicands " + x.d_.str() + " vs " + y.d_.str());
}

AlgebraicNumber operator+(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  Rational d = AlgebraicNumber::common_radicand(x, y);
  return AlgebraicNumber(x.a_ + y.a_, x.b_ + y.b_, d);
}

AlgebraicNumber operator-(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  Rational d = AlgebraicNumber::common_radicand(x, y);
  return AlgebraicNumber(x.a_ - y.a_, x.b_ - y.b_, d);
}

AlgebraicNumber operator*(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  Rational d = AlgebraicNumber::common_radicand(x, y);
  return AlgebraicNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

AlgebraicNumber operator/(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (y.is_zero()) throw std::domain_error("AlgebraicNumber: division by zero");
  Rational d = AlgebraicNumber::common_radicand(x, y);
  // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm cannot
  // vanish for a nonzero value because d is never a perfect square.
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  AlgebraicNumber conj(y.a_ / norm, -y.b_ / norm, y.d_);
  return x * conj;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x) { return os << x.str(); }

}  // namespace quadlab
