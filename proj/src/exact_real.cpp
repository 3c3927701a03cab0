#include "quadlab/exact_real.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace quadlab {

struct ExactReal::Node {
  enum class Op { leaf, add, sub, mul, div, neg, sqrt_op };

  Op op;
  Rational value;  // leaf only
  std::shared_ptr<const Node> a, b;
  bool has_sqrt;

  Node(Rational v) : op(Op::leaf), value(std::move(v)), has_sqrt(false) {}
  Node(Op o, std::shared_ptr<const Node> x, std::shared_ptr<const Node> y)
      : op(o), value(0), a(std::move(x)), b(std::move(y)) {
    has_sqrt = o == Op::sqrt_op || (a && a->has_sqrt) || (b && b->has_sqrt);
  }
};

namespace {

using NodePtr = std::shared_ptr<const ExactReal::Node>;
using Node = ExactReal::Node;
using Op = ExactReal::Node::Op;
using Coeffs = std::vector<Rational>;

// ---------------------------------------------------------------------
// Exact rational evaluation (radical-free expressions)
// ---------------------------------------------------------------------

const Rational& eval_rational(const NodePtr& n,
                              std::unordered_map<const Node*, Rational>& memo) {
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;
  Rational r;
  switch (n->op) {
    case Op::leaf: r = n->value; break;
    case Op::add: r = eval_rational(n->a, memo) + eval_rational(n->b, memo); break;
    case Op::sub: r = eval_rational(n->a, memo) - eval_rational(n->b, memo); break;
    case Op::mul: r = eval_rational(n->a, memo) * eval_rational(n->b, memo); break;
    case Op::div: {
      Rational den = eval_rational(n->b, memo);
      if (den.is_zero()) throw std::domain_error("ExactReal: division by zero");
      r = eval_rational(n->a, memo) / den;
      break;
    }
    case Op::neg: r = -eval_rational(n->a, memo); break;
    case Op::sqrt_op: throw std::logic_error("eval_rational on radical expression");
  }
  return memo.emplace(n.get(), std::move(r)).first->second;
}

// ---------------------------------------------------------------------
// Interval evaluation
// ---------------------------------------------------------------------

const CertifiedInterval& eval_interval(
    const NodePtr& n, int prec,
    std::unordered_map<const Node*, CertifiedInterval>& memo) {
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;
  CertifiedInterval r(prec);
  switch (n->op) {
    case Op::leaf: r = CertifiedInterval(n->value, prec); break;
    case Op::add: r = eval_interval(n->a, prec, memo) + eval_interval(n->b, prec, memo); break;
    case Op::sub: r = eval_interval(n->a, prec, memo) - eval_interval(n->b, prec, memo); break;
    case Op::mul: r = eval_interval(n->a, prec, memo) * eval_interval(n->b, prec, memo); break;
    case Op::div: r = eval_interval(n->a, prec, memo) / eval_interval(n->b, prec, memo); break;
    case Op::neg: r = -eval_interval(n->a, prec, memo); break;
    case Op::sqrt_op: r = CertifiedInterval::sqrt(eval_interval(n->a, prec, memo)); break;
  }
  return memo.emplace(n.get(), std::move(r)).first->second;
}

// ---------------------------------------------------------------------
// Exact fallback: tower normal form
//
// The distinct sqrt subexpressions x_1..x_K become the generators of a
// tower Q(x_1)(x_2)...(x_K), ordered so that each radicand only involves
// earlier generators. An element is a coefficient vector indexed by subsets
// of generators (bitmask order). Dependent radicands (say sqrt(8) next to
// sqrt(2)) merely make the representation non-unique; every routine below
// decides signs via recursion on the *real values*, so results stay exact.
// ---------------------------------------------------------------------

struct Tower {
  std::vector<const Node*> rads;                 // sqrt nodes, dependency order
  std::unordered_map<const Node*, int> index;    // sqrt node -> generator
  std::vector<Coeffs> rad_tnf;                   // radicand i as element of level-i prefix
  int levels() const { return static_cast<int>(rads.size()); }
};

constexpr int kMaxTowerLevels = 14;

void collect_radicands(const NodePtr& n, Tower& t,
                       std::unordered_map<const Node*, bool>& seen,
                       std::unordered_map<std::size_t, std::vector<const Node*>>& leaf_dedup) {
  if (seen.count(n.get())) return;
  seen[n.get()] = true;
  if (n->a) collect_radicands(n->a, t, seen, leaf_dedup);
  if (n->b) collect_radicands(n->b, t, seen, leaf_dedup);
  if (n->op == Op::sqrt_op) {
    // Structural dedup for the common case sqrt(<rational leaf>).
    if (n->a->op == Op::leaf) {
      auto& bucket = leaf_dedup[n->a->value.hash()];
      for (const Node* prev : bucket) {
        if (prev->a->value == n->a->value) {
          t.index[n.get()] = t.index[prev];
          return;
        }
      }
      bucket.push_back(n.get());
    }
    t.index[n.get()] = static_cast<int>(t.rads.size());
    t.rads.push_back(n.get());
    if (t.levels() > kMaxTowerLevels)
      throw std::runtime_error("ExactReal: radical tower too deep for exact fallback");
  }
}

Coeffs zeros(int level) { return Coeffs(static_cast<std::size_t>(1) << level, Rational(0)); }

Coeffs add_tnf(const Coeffs& a, const Coeffs& b, int sign_b) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = sign_b > 0 ? a[i] + b[i] : a[i] - b[i];
  return r;
}

// Multiply level-`level` elements; views are spans of length 2^level.
Coeffs mul_tnf(const Rational* a, const Rational* b, int level, const Tower& t) {
  if (level == 0) return Coeffs{a[0] * b[0]};
  std::size_t half = static_cast<std::size_t>(1) << (level - 1);
  Coeffs p00 = mul_tnf(a, b, level - 1, t);
  Coeffs p11 = mul_tnf(a + half, b + half, level - 1, t);
  Coeffs p01 = mul_tnf(a, b + half, level - 1, t);
  Coeffs p10 = mul_tnf(a + half, b, level - 1, t);
  // low = p00 + p11 * m, high = p01 + p10, with m the radicand of x_level.
  Coeffs m_part = mul_tnf(p11.data(), t.rad_tnf[level - 1].data(), level - 1, t);
  Coeffs r(half * 2);
  for (std::size_t i = 0; i < half; ++i) {
    r[i] = p00[i] + m_part[i];
    r[half + i] = p01[i] + p10[i];
  }
  return r;
}

Coeffs mul_tnf(const Coeffs& a, const Coeffs& b, int level, const Tower& t) {
  return mul_tnf(a.data(), b.data(), level, t);
}

int sign_tnf(const Rational* v, int level, const Tower& t) {
  if (level == 0) return v[0].sign();
  std::size_t half = static_cast<std::size_t>(1) << (level - 1);
  const Rational* u = v;
  const Rational* w = v + half;
  int su = sign_tnf(u, level - 1, t);
  int sw = sign_tnf(w, level - 1, t);
  if (sw == 0) return su;
  if (su == 0) return sw;
  if (su == sw) return su;
  // Signs differ: sign(u + w*x) = sign(u) * sign(u^2 - w^2 * m).
  Coeffs u2 = mul_tnf(u, u, level - 1, t);
  Coeffs w2 = mul_tnf(w, w, level - 1, t);
  Coeffs w2m = mul_tnf(w2.data(), t.rad_tnf[level - 1].data(), level - 1, t);
  Coeffs diff = add_tnf(u2, w2m, -1);
  return su * sign_tnf(diff.data(), level - 1, t);
}

int sign_tnf(const Coeffs& v, int level, const Tower& t) {
  return sign_tnf(v.data(), level, t);
}

// Invert a provably-nonzero element.
Coeffs inv_tnf(const Coeffs& v, int level, const Tower& t) {
  if (level == 0) {
    if (v[0].is_zero()) throw std::domain_error("ExactReal: inverse of zero");
    return Coeffs{Rational(1) / v[0]};
  }
  std::size_t half = static_cast<std::size_t>(1) << (level - 1);
  Coeffs u(v.begin(), v.begin() + half);
  Coeffs w(v.begin() + half, v.end());
  Coeffs u2 = mul_tnf(u, u, level - 1, t);
  Coeffs w2 = mul_tnf(w, w, level - 1, t);
  Coeffs w2m = mul_tnf(w2.data(), t.rad_tnf[level - 1].data(), level - 1, t);
  Coeffs norm = add_tnf(u2, w2m, -1);  // (u + w x)(u - w x)
  if (sign_tnf(norm, level - 1, t) != 0) {
    Coeffs ninv = inv_tnf(norm, level - 1, t);
    Coeffs lo = mul_tnf(u, ninv, level - 1, t);
    Coeffs hi = mul_tnf(w, ninv, level - 1, t);
    Coeffs r(half * 2);
    for (std::size_t i = 0; i < half; ++i) {
      r[i] = lo[i];
      r[half + i] = -hi[i];
    }
    return r;
  }
  // Conjugate is zero as a real: u = w*x, so the element equals 2u exactly.
  Coeffs two_u(half * 2, Rational(0));
  for (std::size_t i = 0; i < half; ++i) two_u[i] = u[i] + u[i];
  Coeffs sub(two_u.begin(), two_u.begin() + half);
  Coeffs r = zeros(level);
  Coeffs inv_low = inv_tnf(sub, level - 1, t);
  for (std::size_t i = 0; i < half; ++i) r[i] = inv_low[i];
  return r;
}

// Pad a level-l element to the full tower width.
Coeffs pad(const Coeffs& v, int full_level) {
  Coeffs r = zeros(full_level);
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

const Coeffs& eval_tnf(const NodePtr& n, const Tower& t, int full,
                       std::unordered_map<const Node*, Coeffs>& memo) {
  auto it = memo.find(n.get());
  if (it != memo.end()) return it->second;
  Coeffs r;
  switch (n->op) {
    case Op::leaf:
      r = zeros(full);
      r[0] = n->value;
      break;
    case Op::add: r = add_tnf(eval_tnf(n->a, t, full, memo), eval_tnf(n->b, t, full, memo), 1); break;
    case Op::sub: r = add_tnf(eval_tnf(n->a, t, full, memo), eval_tnf(n->b, t, full, memo), -1); break;
    case Op::mul: r = mul_tnf(eval_tnf(n->a, t, full, memo), eval_tnf(n->b, t, full, memo), full, t); break;
    case Op::div: {
      const Coeffs& den = eval_tnf(n->b, t, full, memo);
      if (sign_tnf(den, full, t) == 0) throw std::domain_error("ExactReal: division by zero");
      Coeffs den_inv = inv_tnf(den, full, t);
      r = mul_tnf(eval_tnf(n->a, t, full, memo), den_inv, full, t);
      break;
    }
    case Op::neg: {
      const Coeffs& a = eval_tnf(n->a, t, full, memo);
      r = zeros(full);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a[i];
      break;
    }
    case Op::sqrt_op: {
      int idx = t.index.at(n.get());
      r = zeros(full);
      r[static_cast<std::size_t>(1) << idx] = Rational(1);
      break;
    }
  }
  return memo.emplace(n.get(), std::move(r)).first->second;
}

int exact_sign(const NodePtr& n) {
  Tower t;
  {
    std::unordered_map<const Node*, bool> seen;
    std::unordered_map<std::size_t, std::vector<const Node*>> leaf_dedup;
    collect_radicands(n, t, seen, leaf_dedup);
  }
  // Radicand of generator i, expressed over the prefix tower; padding to
  // level i is harmless because later generators never occur inside it.
  std::unordered_map<const Node*, Coeffs> memo;
  int full = t.levels();
  t.rad_tnf.resize(full);
  for (int i = 0; i < full; ++i) {
    std::unordered_map<const Node*, Coeffs> rmemo;
    Tower prefix;
    prefix.rads.assign(t.rads.begin(), t.rads.begin() + i);
    prefix.index = t.index;
    prefix.rad_tnf.assign(t.rad_tnf.begin(), t.rad_tnf.begin() + i);
    Coeffs c = eval_tnf(t.rads[i]->a, prefix, i, rmemo);
    t.rad_tnf[i] = std::move(c);
  }
  const Coeffs& v = eval_tnf(n, t, full, memo);
  return sign_tnf(v, full, t);
}

NodePtr make_leaf(Rational v) { return std::make_shared<const Node>(std::move(v)); }

NodePtr make_op(Op op, NodePtr a, NodePtr b = nullptr) {
  return std::make_shared<const Node>(op, std::move(a), std::move(b));
}

}  // namespace

// ---------------------------------------------------------------------
// ExactReal surface
// ---------------------------------------------------------------------

ExactReal::ExactReal() : n_(make_leaf(Rational(0))) {}
ExactReal::ExactReal(int n) : n_(make_leaf(Rational(n))) {}
ExactReal::ExactReal(long n) : n_(make_leaf(Rational(n))) {}
ExactReal::ExactReal(Rational r) : n_(make_leaf(std::move(r))) {}

ExactReal::ExactReal(const AlgebraicNumber& x) {
  if (x.is_rational()) {
    n_ = make_leaf(x.a());
  } else {
    NodePtr rad = make_op(Op::sqrt_op, make_leaf(x.d()));
    NodePtr term = make_op(Op::mul, make_leaf(x.b()), rad);
    n_ = make_op(Op::add, make_leaf(x.a()), term);
  }
}

ExactReal ExactReal::sqrt(const ExactReal& x) {
  if (x.sign() < 0) throw std::domain_error("ExactReal::sqrt of negative value");
  return ExactReal(make_op(Op::sqrt_op, x.n_));
}

SignResult ExactReal::sign_detail() const {
  SignResult res;
  if (!n_->has_sqrt) {
    std::unordered_map<const Node*, Rational> memo;
    res.sign = eval_rational(n_, memo).sign();
    res.method = SignMethod::rational;
    return res;
  }
  for (int bits = 128; bits <= 2048; bits *= 2) {
    std::unordered_map<const Node*, CertifiedInterval> memo;
    CertifiedInterval iv = eval_interval(n_, bits, memo);
    if (!iv.contains_zero()) {
      res.sign = iv.sign();
      res.method = SignMethod::interval;
      res.bits_used = bits;
      return res;
    }
  }
  res.sign = exact_sign(n_);
  res.method = SignMethod::exact_field;
  res.bits_used = 2048;
  return res;
}

CertifiedInterval ExactReal::interval(int precision_bits) const {
  std::unordered_map<const Node*, CertifiedInterval> memo;
  return eval_interval(n_, precision_bits, memo);
}

double ExactReal::to_double() const { return interval(256).midpoint_double(); }

std::string ExactReal::decimal(int digits) const {
  if (!n_->has_sqrt) {
    std::unordered_map<const Node*, Rational> memo;
    return eval_rational(n_, memo).decimal(digits);
  }
  int prec = digits * 4 + 128;
  std::unordered_map<const Node*, CertifiedInterval> memo;
  CertifiedInterval iv = eval_interval(n_, prec, memo);
  return iv.midpoint_decimal(digits);
}

bool ExactReal::is_rational_expression() const { return !n_->has_sqrt; }

Rational ExactReal::rational_value() const {
  if (n_->has_sqrt) throw std::logic_error("ExactReal: not a rational expression");
  std::unordered_map<const Node*, Rational> memo;
  return eval_rational(n_, memo);
}

ExactReal ExactReal::operator-() const { return ExactReal(make_op(Op::neg, n_)); }

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
  return ExactReal(make_op(Op::add, x.n_, y.n_));
}
ExactReal operator-(const ExactReal& x, const ExactReal& y) {
  return ExactReal(make_op(Op::sub, x.n_, y.n_));
}
ExactReal operator*(const ExactReal& x, const ExactReal& y) {
  return ExactReal(make_op(Op::mul, x.n_, y.n_));
}
ExactReal operator/(const ExactReal& x, const ExactReal& y) {
  return ExactReal(make_op(Op::div, x.n_, y.n_));
}

}  // namespace quadlab
