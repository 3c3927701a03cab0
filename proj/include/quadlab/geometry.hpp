#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "quadlab/algebraic_number.hpp"
#include "quadlab/exact_real.hpp"
#include "quadlab/rational.hpp"

// Eigen scalar adapters for the exact number types. epsilon() = 0 keeps all
// Eigen internals exact (no fuzzy comparisons are reachable from the fixed
// size kernels used here).
namespace Eigen {

template <>
struct NumTraits<quadlab::Rational> : GenericNumTraits<quadlab::Rational> {
  typedef quadlab::Rational Real;
  typedef quadlab::Rational NonInteger;
  typedef quadlab::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32,
  };
};

template <>
struct NumTraits<quadlab::AlgebraicNumber> : GenericNumTraits<quadlab::AlgebraicNumber> {
  typedef quadlab::AlgebraicNumber Real;
  typedef quadlab::AlgebraicNumber NonInteger;
  typedef quadlab::AlgebraicNumber Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 96,
    MulCost = 128,
  };
};

template <>
struct NumTraits<quadlab::ExactReal> : GenericNumTraits<quadlab::ExactReal> {
  typedef quadlab::ExactReal Real;
  typedef quadlab::ExactReal NonInteger;
  typedef quadlab::ExactReal Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8,
  };
};

}  // namespace Eigen

namespace quadlab {

template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <class Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <class Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3q = Vec3<Rational>;
using Vec2q = Vec2<Rational>;
using Mat3q = Mat3<Rational>;
using Vec3a = Vec3<AlgebraicNumber>;
using Vec3r = Vec3<ExactReal>;
using Vec3d = Vec3<double>;

/// Determinant of the 3x3 matrix with columns u, v, w; exact for exact scalars.
template <class Scalar>
Scalar det3(const Vec3<Scalar>& u, const Vec3<Scalar>& v, const Vec3<Scalar>& w) {
  Mat3<Scalar> m;
  m.col(0) = u;
  m.col(1) = v;
  m.col(2) = w;
  return m.determinant();
}

/// 2D cross product (z component of the 3D one).
template <class Scalar>
Scalar cross2(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

template <class From, class To>
Vec3<To> vec_cast(const Vec3<From>& v) {
  return Vec3<To>(To(v.x()), To(v.y()), To(v.z()));
}

inline Vec3d to_double(const Vec3q& v) {
  return Vec3d(v.x().to_double(), v.y().to_double(), v.z().to_double());
}
inline Vec3d to_double(const Vec3a& v) {
  return Vec3d(v.x().to_double(), v.y().to_double(), v.z().to_double());
}
inline Vec3d to_double(const Vec3r& v) {
  return Vec3d(v.x().to_double(), v.y().to_double(), v.z().to_double());
}

/// Invertible affine map x -> L x + t with rational entries.
struct AffineMap {
  Mat3q linear = Mat3q::Identity();
  Vec3q translation = Vec3q::Zero();

  Vec3q operator()(const Vec3q& x) const { return linear * x + translation; }

  Rational det() const { return linear.determinant(); }

  AffineMap inverse() const;
  /// Composition: (this after other)(x) = this(other(x)).
  AffineMap after(const AffineMap& other) const;

  static AffineMap identity() { return AffineMap{}; }
  static AffineMap translation_by(const Vec3q& t);
  static AffineMap scaling_about(const Vec3q& center, const Rational& factor);
  /// Contraction of the z coordinate toward the plane z = center_z.
  static AffineMap z_contraction_about(const Rational& center_z, const Rational& factor);
  /// Rotation in the xy-plane about the vertical line through `center`,
  /// with exact rational cosine/sine pair (c^2 + s^2 must equal 1).
  static AffineMap xy_rotation_about(const Vec3q& center, const Rational& c, const Rational& s);
};

/// Rational point on the unit circle from the tangent half-angle t:
/// cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
std::pair<Rational, Rational> rational_circle_point(const Rational& half_tangent);

}  // namespace quadlab
