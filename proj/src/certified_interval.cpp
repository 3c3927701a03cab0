#include "quadlab/certified_interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quadlab {

CertifiedInterval::CertifiedInterval(int precision_bits) : prec_(precision_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

CertifiedInterval::CertifiedInterval(const Rational& value, int precision_bits)
    : prec_(precision_bits) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_q(lo_, value.mpq().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.mpq().get_mpq_t(), MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(const CertifiedInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

CertifiedInterval::CertifiedInterval(CertifiedInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

CertifiedInterval& CertifiedInterval::operator=(const CertifiedInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

CertifiedInterval& CertifiedInterval::operator=(CertifiedInterval&& o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

CertifiedInterval::~CertifiedInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool CertifiedInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int CertifiedInterval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

double CertifiedInterval::midpoint_double() const {
  return 0.5 * (lo_double() + hi_double());
}

double CertifiedInterval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

std::string CertifiedInterval::str() const {
  std::ostringstream os;
  os << "[" << lo_double() << ", " << hi_double() << "]@" << prec_;
  return os.str();
}

std::string CertifiedInterval::midpoint_decimal(int digits) const {
  if (digits < 1) digits = 1;
  mpfr_t mid;
  mpfr_init2(mid, prec_);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, mid);
  std::string s(out);
  mpfr_free_str(out);
  mpfr_clear(mid);
  return s;
}

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

CertifiedInterval operator-(const CertifiedInterval& a) {
  CertifiedInterval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

CertifiedInterval operator*(const CertifiedInterval& a, const CertifiedInterval& b) {
  CertifiedInterval r(std::max(a.prec_, b.prec_));
  mpfr_t p, lo, hi;
  mpfr_init2(p, r.prec_);
  mpfr_init2(lo, r.prec_);
  mpfr_init2(hi, r.prec_);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(p, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(p, lo) < 0) mpfr_set(lo, p, MPFR_RNDD);
      mpfr_mul(p, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(p, hi) > 0) mpfr_set(hi, p, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  mpfr_clear(p);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

CertifiedInterval operator/(const CertifiedInterval& a, const CertifiedInterval& b) {
  int prec = std::max(a.prec_, b.prec_);
  if (b.contains_zero()) return CertifiedInterval::whole_line(prec);
  CertifiedInterval r(prec);
  mpfr_t q, lo, hi;
  mpfr_init2(q, prec);
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  bool first = true;
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  for (auto x : as)
    for (auto y : bs) {
      mpfr_div(q, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(q, lo) < 0) mpfr_set(lo, q, MPFR_RNDD);
      mpfr_div(q, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(q, hi) > 0) mpfr_set(hi, q, MPFR_RNDU);
      first = false;
    }
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  mpfr_clear(q);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

CertifiedInterval CertifiedInterval::sqrt(const CertifiedInterval& a) {
  if (mpfr_sgn(a.hi_) < 0)
    throw std::domain_error("CertifiedInterval::sqrt of negative interval");
  CertifiedInterval r(a.prec_);
  if (mpfr_sgn(a.lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

CertifiedInterval CertifiedInterval::whole_line(int precision_bits) {
  CertifiedInterval r(precision_bits);
  mpfr_set_inf(r.lo_, -1);
  mpfr_set_inf(r.hi_, 1);
  return r;
}

}  // namespace quadlab
