#pragma once

#include <mpfr.h>

#include <string>

#include "quadlab/rational.hpp"

namespace quadlab {

/// Outward-rounded floating interval [lo, hi] at a fixed working precision.
/// Invariant: lo <= hi and the exact value being tracked lies in [lo, hi].
/// Used as the fast layer of certified sign determination; precision starts
/// at 128 bits and doubles up to 2048 before the exact fallback fires.
class CertifiedInterval {
 public:
  explicit CertifiedInterval(int precision_bits = 128);
  CertifiedInterval(const Rational& value, int precision_bits);
  CertifiedInterval(const CertifiedInterval& o);
  CertifiedInterval(CertifiedInterval&& o) noexcept;
  CertifiedInterval& operator=(const CertifiedInterval& o);
  CertifiedInterval& operator=(CertifiedInterval&& o) noexcept;
  ~CertifiedInterval();

  int precision_bits() const { return prec_; }

  bool contains_zero() const;
  /// +1 / -1 when the interval excludes zero, 0 when it straddles zero.
  int sign() const;

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double midpoint_double() const;
  /// Upper bound on hi - lo.
  double width_double() const;

  std::string str() const;
  /// Midpoint rendered with `digits` significant decimal digits, computed
  /// at the interval's working precision.
  std::string midpoint_decimal(int digits) const;

  friend CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b);
  friend CertifiedInterval operator-(const CertifiedInterval& a);
  /// Interval division; if the divisor straddles zero the result is the
  /// whole real line (the caller's ladder will escalate precision).
  friend CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b);
  /// Square root; pre: hi >= 0 (lo is clamped at zero, valid whenever the
  /// tracked exact value is known to be nonnegative).
  static CertifiedInterval sqrt(const CertifiedInterval& a);

  static CertifiedInterval whole_line(int precision_bits);

 private:
  mpfr_t lo_, hi_;
  int prec_;
};

}  // namespace quadlab
