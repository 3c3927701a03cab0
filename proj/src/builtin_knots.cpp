#include "quadlab/builtin_knots.hpp"

#include <stdexcept>

namespace quadlab {

namespace {

Vec3q v3(long x, long y, long z) { return Vec3q(Rational(x), Rational(y), Rational(z)); }
Vec3q v3(Rational x, Rational y, Rational z) { return Vec3q(x, y, z); }

std::vector<Vec3q> primary_vertices() {
  return {
      v3(0, 0, 0),    v3(0, 0, -4),  v3(8, -2, -4), v3(6, -3, -6), v3(0, 0, -6),
      v3(0, 0, -8),   v3(10, -1, -8), v3(10, -1, 1), v3(6, 1, 0),   v3(8, 0, -1),
      v3(6, -1, 0),   v3(12, -2, -3), v3(12, 0, 0),  v3(6, 2, 0),
  };
}

PolygonalKnot hexagonal_unknot() {
  return PolygonalKnot(
      {
          v3(Rational(-1, 5), Rational(-3, 10), Rational(0)),
          v3(Rational(4, 5), Rational(0), Rational(-1, 5)),
          v3(Rational(2), Rational(0), Rational(1)),
          v3(Rational(13, 4), Rational(0), Rational(-1, 4)),
          v3(Rational(17, 4), Rational(-3, 8), Rational(0)),
          v3(Rational(2), Rational(3), Rational(0)),
      },
      "k6");
}

PolygonalKnot triangle_stage() {
  return PolygonalKnot(
      {v3(0, 0, 0), v3(1, 0, 0), v3(2, 0, 1), v3(3, 0, 0), v3(4, 0, 0), v3(2, 3, 0)},
      "k6_triangle_stage");
}

}  // namespace

PolygonalKnot derive_final_14(const std::vector<Vec3q>& v, const std::string& name) {
  if (v.size() != 14)
    throw std::invalid_argument("derive_final_14: expected 14 primary vertices");
  // 1-based aliases matching the derivation formulas.
  auto V = [&](int i) -> const Vec3q& { return v[i - 1]; };

  const Rational d3(1, 5), d4(1, 4), d6(1, 2);
  const Rational e1(1, 10), e2(1, 10), e3(1, 5), e4(1, 10), e5(1, 5), e6(1, 10);
  const Rational e9(1, 10), e10(1, 20), e11(1, 20), e12(1, 10), e13(1, 10);

  Vec3q U3 = V(3) - (V(3) - V(4)) * d3;
  Vec3q U4 = V(4) + (V(3) - V(4)) * d4;
  Vec3q U6 = V(6) - Vec3q(Rational(0), Rational(0), d6);

  std::vector<Vec3q> w(14, Vec3q::Zero());
  w[0] = V(1) + (V(1) - V(14)) * e1;
  w[1] = V(2) + (V(2) - U3) * e2;
  w[2] = U3 - (V(2) - U3) * e3;
  w[3] = U4 + (U4 - V(5)) * e4;
  w[4] = V(5) - (U4 - V(5)) * e5;
  w[5] = U6 + (U6 - V(7)) * e6;
  w[6] = V(7);
  w[7] = V(8);
  w[8] = V(9) + (V(9) - V(8)) * e9;
  w[9] = V(10) + (V(10) - V(11)) * e10;
  w[10] = V(11) - (V(10) - V(11)) * e11;
  w[11] = V(12) + (V(12) - V(13)) * e12;
  w[12] = V(13) - (V(12) - V(13)) * e13;
  w[13] = V(14);
  return PolygonalKnot(std::move(w), name);
}

PolygonalKnot builtin_knot(const std::string& name) {
  if (name == "k6") return hexagonal_unknot();
  if (name == "k6_triangle_stage") return triangle_stage();
  if (name == "k0") return PolygonalKnot(primary_vertices(), "k0");
  if (name == "k14") return derive_final_14(primary_vertices(), "k14");
  if (name == "k14_remark") {
    auto v = primary_vertices();
    v[9] = v3(Rational(8), Rational(0), Rational(-11, 10));
    v[11] = v3(Rational(12), Rational(-2), Rational(-33, 10));
    return derive_final_14(v, "k14_remark");
  }
  std::string known;
  for (const auto& n : builtin_knot_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown builtin knot '" + name + "' (known: " + known + ")");
}

std::vector<std::string> builtin_knot_names() {
  return {"k6", "k6_triangle_stage", "k0", "k14", "k14_remark"};
}

}  // namespace quadlab
