#include "quadlab/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace quadlab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Decimal literal: [sign] digits [. digits] [ (e|E) [sign] digits ]
Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part, exp_part;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    int_part += text[pos++];
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      frac_part += text[pos++];
  }
  long exp10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      eneg = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("Rational: bad exponent in '" + text + "'");
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      exp_part += text[pos++];
    exp10 = std::stol(exp_part);
    if (eneg) exp10 = -exp10;
  }
  if (pos != text.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");

  mpz_class num(int_part.empty() ? std::string("0") : int_part);
  mpz_class den(1);
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  for (long e = 0; e < exp10; ++e) num *= 10;
  for (long e = 0; e > exp10; --e) den *= 10;
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string ns = text.substr(0, slash);
    std::string ds = text.substr(slash + 1);
    bool nneg = false;
    if (!ns.empty() && (ns[0] == '+' || ns[0] == '-')) {
      nneg = ns[0] == '-';
      ns = ns.substr(1);
    }
    if (!all_digits(ns) || !all_digits(ds))
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    mpz_class num(ns), den(ds);
    if (nneg) num = -num;
    return Rational(num, den);
  }
  return parse_decimal(text);
}

std::optional<Rational> Rational::sqrt_if_square() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return Rational(0);
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  mpfr_t x;
  // ~3.33 bits per decimal digit, plus slack
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, x);
  std::string s(out);
  mpfr_free_str(out);
  mpfr_clear(x);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t Rational::hash() const {
  // Cheap but stable: fold limbs of numerator and denominator.
  auto fold = [](const mpz_class& z, std::size_t seed) {
    std::size_t h = seed ^ (z < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    mpz_class a = ::abs(z);
    while (a != 0) {
      h = h * 1099511628211ULL + a.get_ui();
      a >>= 32;
    }
    return h;
  };
  return fold(v_.get_den(), fold(v_.get_num(), 14695981039346656037ULL));
}

}  // namespace quadlab
