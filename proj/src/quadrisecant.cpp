#include "quadlab/quadrisecant.hpp"

#include <algorithm>
#include <thread>

#include "quadlab/exact_real.hpp"
#include "quadlab/segment_predicates.hpp"

namespace quadlab {

namespace {

// Scale (A, B, C) to coprime integers with positive leading coefficient so
// the discriminant (the radicand carried by the roots) is deterministic.
void normalize_coeffs(Rational& A, Rational& B, Rational& C) {
  mpz_class l = 1;
  for (const Rational* r : {&A, &B, &C}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->denominator().get_mpz_t());
  mpz_class na = mpz_class(A.numerator() * (l / A.denominator()));
  mpz_class nb = mpz_class(B.numerator() * (l / B.denominator()));
  mpz_class nc = mpz_class(C.numerator() * (l / C.denominator()));
  mpz_class g = 0;
  mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nc.get_mpz_t());
  if (g == 0) {
    A = B = C = Rational(0);
    return;
  }
  na /= g;
  nb /= g;
  nc /= g;
  mpz_class lead = na != 0 ? na : (nb != 0 ? nb : nc);
  if (lead < 0) {
    na = -na;
    nb = -nb;
    nc = -nc;
  }
  A = Rational(na);
  B = Rational(nb);
  C = Rational(nc);
}

Vec3a to_alg(const Vec3q& v) { return vec_cast<Rational, AlgebraicNumber>(v); }

bool alg_vec_zero(const Vec3a& v) {
  return v.x().is_zero() && v.y().is_zero() && v.z().is_zero();
}

// Exact comparison key for canonical ordering of quadrisecants.
int compare_records(const SecantRecord& a, const SecantRecord& b) {
  if (a.edge != b.edge) return a.edge < b.edge ? -1 : 1;
  return certified_compare(a.parameter, b.parameter);
}

int compare_quadrisecants(const Quadrisecant& a, const Quadrisecant& b) {
  for (int s = 0; s < 4; ++s) {
    int c = compare_records(a.secants[s], b.secants[s]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

QuadrupleCoefficients quadruple_coefficients(const PolygonalKnot& k, const EdgeQuadruple& q) {
  const Vec3q Vi = k.vertex(q.i), Vj = k.vertex(q.j), Vk = k.vertex(q.k), Vl = k.vertex(q.l);
  const Vec3q vi = k.edge_vector(q.i), vj = k.edge_vector(q.j), vk = k.edge_vector(q.k),
              vl = k.edge_vector(q.l);

  Rational D = det3(vi, vj, vk);
  Rational Dp = det3(vi, vj, vl);
  if (D.is_zero() || Dp.is_zero())
    throw std::domain_error("quadruple_coefficients: (b') violated for this quadruple");

  QuadrupleCoefficients c;
  c.a1 = det3<Rational>(Vk - Vj, vj, vk) / D;
  c.b1 = det3<Rational>(Vj - Vi, vj, vk) / D;
  c.a2 = det3<Rational>(vi, Vi - Vk, vk) / D;
  c.b2 = det3<Rational>(vi, Vk - Vj, vk) / D;
  c.c1 = det3<Rational>(Vl - Vj, vj, vl) / Dp;
  c.e1 = det3<Rational>(Vj - Vi, vj, vl) / Dp;
  c.c2 = det3<Rational>(vi, Vi - Vl, vl) / Dp;
  c.e2 = det3<Rational>(vi, Vl - Vj, vl) / Dp;
  c.r1 = det3<Rational>(vi, vj, Vj - Vi) / D;
  c.r0 = det3<Rational>(vi, vj, Vi - Vk) / D;
  c.s1 = det3<Rational>(vi, vj, Vj - Vi) / Dp;
  c.s0 = det3<Rational>(vi, vj, Vi - Vl) / Dp;

  // The two guard determinants are nonzero whenever (a') holds: each is the
  // coplanarity test of four distinct vertices.
  if (c.a2.is_zero() || c.c1.is_zero())
    throw std::domain_error("quadruple_coefficients: guard determinant zero ((a') violated)");

  // Eliminate y from p(x) = p(y), q(x) = q(y).
  Rational M = c.c1 - c.b1 + c.e1;
  Rational B2 = c.b2 - c.e2;
  c.A = c.c1 * c.c2 - (c.a2 + B2) * M;
  c.B = (c.a2 + B2) * (M - c.a1) + c.a2 * M - c.c1 * c.c2;
  c.C = c.a2 * (c.a1 - M);
  normalize_coeffs(c.A, c.B, c.C);
  return c;
}

QuadrupleResult solve_quadruple(const PolygonalKnot& k, const EdgeQuadruple& q) {
  QuadrupleCoefficients co = quadruple_coefficients(k, q);
  QuadraticRoots roots = solve_quadratic_exact(co.A, co.B, co.C);
  if (roots.is_identically_zero()) {
    DegeneracyReport rep;
    rep.kind = DegeneracyReport::Kind::infinite_solutions;
    rep.witness = {q.i, q.j, q.k, q.l};
    return rep;
  }

  std::vector<Quadrisecant> found;
  const AlgebraicNumber one(Rational(1));
  for (const AlgebraicNumber& x : roots.roots) {
    if (x.is_zero() || x == one) continue;
    AlgebraicNumber p = AlgebraicNumber(co.a1) / (one - x) + AlgebraicNumber(co.b1);
    AlgebraicNumber t = p - AlgebraicNumber(co.e1);
    if (t.is_zero()) continue;  // no finite y matches this root
    AlgebraicNumber y = one - AlgebraicNumber(co.c1) / t;
    if (y.is_zero() || y == one) continue;
    AlgebraicNumber qq = AlgebraicNumber(co.a2) * (x - one) / x + AlgebraicNumber(co.b2);
    AlgebraicNumber q_other = AlgebraicNumber(co.c2) * (y - one) / y + AlgebraicNumber(co.e2);
    if (qq != q_other) continue;  // spurious root introduced by clearing denominators
    AlgebraicNumber r = AlgebraicNumber(co.r1) * x + AlgebraicNumber(co.r0);
    AlgebraicNumber s = AlgebraicNumber(co.s1) * y + AlgebraicNumber(co.s0);

    auto in_range = [&](const AlgebraicNumber& u) {
      return u.sign() >= 0 && (u - one).sign() < 0;  // 0 <= u < 1
    };
    if (!in_range(p) || !in_range(qq) || !in_range(r) || !in_range(s)) continue;

    std::array<std::pair<int, AlgebraicNumber>, 4> params = {
        std::make_pair(q.i, p), std::make_pair(q.j, qq), std::make_pair(q.k, r),
        std::make_pair(q.l, s)};
    Quadrisecant result;
    for (int idx = 0; idx < 4; ++idx) {
      SecantRecord rec;
      rec.edge = params[idx].first;
      rec.parameter = params[idx].second;
      rec.point = to_alg(k.vertex(rec.edge)) +
                  to_alg(k.edge_vector(rec.edge)) * rec.parameter;
      result.secants[idx] = rec;
    }
    // Exact collinearity of all four recovered points.
    Vec3a d = result.secants[1].point - result.secants[0].point;
    Vec3a d2 = result.secants[2].point - result.secants[0].point;
    Vec3a d3v = result.secants[3].point - result.secants[0].point;
    if (!alg_vec_zero(d.cross(d2)) || !alg_vec_zero(d.cross(d3v))) continue;

    result.anchor = result.secants[0].point;
    result.direction = d;
    result.x_root = x;
    result.radicand = x.is_rational() ? Rational(0) : x.d();
    found.push_back(std::move(result));
  }
  return found;
}

bool same_line(const Quadrisecant& a, const Quadrisecant& b) {
  Vec3r da = vec_cast<AlgebraicNumber, ExactReal>(a.direction);
  Vec3r db = vec_cast<AlgebraicNumber, ExactReal>(b.direction);
  if (!detail::is_zero_vec<ExactReal>(da.cross(db))) return false;
  Vec3r off = vec_cast<AlgebraicNumber, ExactReal>(b.anchor) -
              vec_cast<AlgebraicNumber, ExactReal>(a.anchor);
  return detail::is_zero_vec<ExactReal>(da.cross(off));
}

std::vector<Quadrisecant> find_all_quadrisecants(const PolygonalKnot& k,
                                                 const SolverOptions& opts) {
  int n = k.size();
  if (n < 4) throw std::invalid_argument("find_all_quadrisecants: need more than 3 edges");

  std::vector<EdgeQuadruple> quads;
  quads.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 24);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int kk = j + 1; kk < n; ++kk)
        for (int l = kk + 1; l < n; ++l) quads.push_back({i, j, kk, l});

  // Parallel fan-out with a deterministic merge: results are indexed by
  // quadruple, so the output cannot depend on scheduling.
  std::vector<QuadrupleResult> results(quads.size());
  int threads = opts.threads > 0 ? opts.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<std::size_t>(threads, quads.size() ? quads.size() : 1);
  if (threads <= 1 || quads.size() < 32) {
    for (std::size_t qi = 0; qi < quads.size(); ++qi)
      results[qi] = solve_quadruple(k, quads[qi]);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (quads.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(quads.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t qi = lo; qi < hi; ++qi) results[qi] = solve_quadruple(k, quads[qi]);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Quadrisecant> merged;
  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    if (auto* deg = std::get_if<DegeneracyReport>(&results[qi])) {
      if (deg->kind == DegeneracyReport::Kind::infinite_solutions)
        throw InfiniteFamilyError(quads[qi]);
      continue;
    }
    for (auto& cand : std::get<std::vector<Quadrisecant>>(results[qi]))
      merged.push_back(std::move(cand));
  }

  // Merge candidates that describe the same line. A line that carries five
  // or more distinct secant records is a quintisecant (or worse): abort.
  std::vector<Quadrisecant> lines;
  for (auto& cand : merged) {
    bool dup = false;
    for (auto& known : lines) {
      if (!same_line(known, cand)) continue;
      dup = true;
      std::vector<SecantRecord> all(known.secants.begin(), known.secants.end());
      for (const auto& rec : cand.secants) {
        bool present = false;
        for (const auto& have : all)
          if (have.edge == rec.edge && certified_compare(have.parameter, rec.parameter) == 0) {
            present = true;
            break;
          }
        if (!present) all.push_back(rec);
      }
      if (all.size() > 4) throw QuintisecantError(static_cast<int>(all.size()));
      break;
    }
    if (!dup) lines.push_back(std::move(cand));
  }

  std::sort(lines.begin(), lines.end(),
            [](const Quadrisecant& a, const Quadrisecant& b) {
              return compare_quadrisecants(a, b) < 0;
            });
  return lines;
}

TransversalFamily transversal_family(const PolygonalKnot& k, int ei, int ej, int ek) {
  TransversalFamily f;
  f.ei = ei;
  f.ej = ej;
  f.ek = ek;
  f.Vi = k.vertex(ei);
  f.vi = k.edge_vector(ei);
  f.Vj = k.vertex(ej);
  f.vj = k.edge_vector(ej);
  f.Vk = k.vertex(ek);
  f.vk = k.edge_vector(ek);
  Rational D = det3(f.vi, f.vj, f.vk);
  if (D.is_zero()) throw std::domain_error("transversal_family: (b') violated for triple");

  Rational g1 = det3<Rational>(f.Vk - f.Vj, f.vj, f.vk);
  Rational g5 = det3<Rational>(f.vi, f.vj, f.Vj - f.Vi);
  f.a1 = g1 / D;
  f.b1 = det3<Rational>(f.Vj - f.Vi, f.vj, f.vk) / D;
  f.a2 = det3<Rational>(f.vi, f.Vi - f.Vk, f.vk) / D;
  f.b2 = det3<Rational>(f.vi, f.Vk - f.Vj, f.vk) / D;
  f.r1 = g5 / D;
  f.r0 = det3<Rational>(f.vi, f.vj, f.Vi - f.Vk) / D;

  if (g1.is_zero() && g5.is_zero())
    f.kind = TransversalFamily::Kind::impossible;
  else if (g1.is_zero() || g5.is_zero())
    f.kind = TransversalFamily::Kind::planar;
  else
    f.kind = TransversalFamily::Kind::quadric;
  return f;
}

std::optional<TransversalFamily::Sample> TransversalFamily::at(const Rational& x) const {
  if (x.is_zero() || x == Rational(1)) return std::nullopt;
  Sample s;
  s.p = a1 / (Rational(1) - x) + b1;
  s.q = a2 * (x - Rational(1)) / x + b2;
  s.r = r1 * x + r0;
  s.point_i = Vi + vi * s.p;
  s.point_j = Vj + vj * s.q;
  s.point_k = Vk + vk * s.r;
  return s;
}

std::optional<TransversalFamily::DoubleSample> TransversalFamily::at(double x) const {
  if (x == 0.0 || x == 1.0) return std::nullopt;
  DoubleSample s;
  double da1 = a1.to_double(), db1 = b1.to_double(), da2 = a2.to_double(),
         db2 = b2.to_double(), dr1 = r1.to_double(), dr0 = r0.to_double();
  s.p = da1 / (1.0 - x) + db1;
  s.q = da2 * (x - 1.0) / x + db2;
  s.r = dr1 * x + dr0;
  s.point_i = to_double(Vi) + to_double(vi) * s.p;
  s.point_j = to_double(Vj) + to_double(vj) * s.q;
  s.point_k = to_double(Vk) + to_double(vk) * s.r;
  return s;
}

}  // namespace quadlab
