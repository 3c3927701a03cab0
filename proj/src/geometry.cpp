#include "quadlab/geometry.hpp"

#include <stdexcept>

namespace quadlab {

AffineMap AffineMap::inverse() const {
  Rational d = det();
  if (d.is_zero()) throw std::domain_error("AffineMap: singular linear part");
  // Adjugate inverse keeps everything rational.
  Mat3q adj;
  const Mat3q& m = linear;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  AffineMap inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.linear(i, j) = adj(i, j) / d;
  inv.translation = -(inv.linear * translation);
  return inv;
}

AffineMap AffineMap::after(const AffineMap& other) const {
  AffineMap r;
  r.linear = linear * other.linear;
  r.translation = linear * other.translation + translation;
  return r;
}

AffineMap AffineMap::translation_by(const Vec3q& t) {
  AffineMap m;
  m.translation = t;
  return m;
}

AffineMap AffineMap::scaling_about(const Vec3q& center, const Rational& factor) {
  AffineMap m;
  m.linear = Mat3q::Identity() * factor;
  m.translation = center - m.linear * center;
  return m;
}

AffineMap AffineMap::z_contraction_about(const Rational& center_z, const Rational& factor) {
  AffineMap m;
  m.linear = Mat3q::Identity();
  m.linear(2, 2) = factor;
  m.translation = Vec3q(Rational(0), Rational(0), center_z - factor * center_z);
  return m;
}

AffineMap AffineMap::xy_rotation_about(const Vec3q& center, const Rational& c,
                                       const Rational& s) {
  if (c * c + s * s != Rational(1))
    throw std::invalid_argument("xy_rotation_about: (c, s) not on the unit circle");
  AffineMap m;
  m.linear = Mat3q::Identity();
  m.linear(0, 0) = c;
  m.linear(0, 1) = -s;
  m.linear(1, 0) = s;
  m.linear(1, 1) = c;
  m.translation = center - m.linear * center;
  return m;
}

std::pair<Rational, Rational> rational_circle_point(const Rational& t) {
  Rational den = Rational(1) + t * t;
  return {(Rational(1) - t * t) / den, (Rational(2) * t) / den};
}

}  // namespace quadlab
