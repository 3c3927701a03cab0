#pragma once

#include "quadlab/geometry.hpp"

namespace quadlab {

/// Exact 3D segment/segment intersection classification. Works for any
/// exact scalar with certified sign (Rational, ExactReal).
template <class S>
struct SegmentIntersection {
  enum class Kind { none, point, overlap };
  Kind kind = Kind::none;

  // Point case: locus plus whether it is interior to each segment.
  Vec3<S> point = Vec3<S>::Zero();
  bool interior_first = false;
  bool interior_second = false;

  // Overlap case: the shared subsegment.
  Vec3<S> overlap_a = Vec3<S>::Zero();
  Vec3<S> overlap_b = Vec3<S>::Zero();
};

namespace detail {
template <class S>
int sign_of(const S& x) {
  return x.sign();
}
template <class S>
bool is_zero_vec(const Vec3<S>& v) {
  return sign_of(v.x()) == 0 && sign_of(v.y()) == 0 && sign_of(v.z()) == 0;
}
}  // namespace detail

/// Intersect segments [a0, a1] and [b0, b1]; segments must be nondegenerate.
template <class S>
SegmentIntersection<S> segment_intersect_3d(const Vec3<S>& a0, const Vec3<S>& a1,
                                            const Vec3<S>& b0, const Vec3<S>& b1) {
  using K = typename SegmentIntersection<S>::Kind;
  SegmentIntersection<S> out;
  Vec3<S> d1 = a1 - a0;
  Vec3<S> d2 = b1 - b0;
  Vec3<S> r = b0 - a0;
  Vec3<S> n = d1.cross(d2);

  if (!detail::is_zero_vec(n)) {
    // Lines are skew or meet in one point; coplanarity first.
    S triple = n.dot(r);
    if (detail::sign_of(triple) != 0) return out;
    S den = n.dot(n);  // > 0
    S t_num = r.cross(d2).dot(n);
    S u_num = r.cross(d1).dot(n);
    int t_lo = detail::sign_of(t_num);
    int t_hi = detail::sign_of(den - t_num);
    int u_lo = detail::sign_of(u_num);
    int u_hi = detail::sign_of(den - u_num);
    if (t_lo < 0 || t_hi < 0 || u_lo < 0 || u_hi < 0) return out;
    out.kind = K::point;
    S t = t_num / den;
    out.point = a0 + (d1 * t);
    out.interior_first = t_lo > 0 && t_hi > 0;
    out.interior_second = u_lo > 0 && u_hi > 0;
    return out;
  }

  // Parallel: either disjoint lines or the collinear case.
  if (!detail::is_zero_vec(d1.cross(r))) return out;

  // Collinear: compare 1D positions s(x) = d1 . (x - a0).
  S zero(0);
  S len = d1.dot(d1);  // position of a1; a0 is at 0
  S pb0 = d1.dot(r);
  S pb1 = d1.dot(b1 - a0);
  S blo = pb0, bhi = pb1;
  Vec3<S> blo_pt = b0, bhi_pt = b1;
  if (detail::sign_of(pb1 - pb0) < 0) {
    std::swap(blo, bhi);
    std::swap(blo_pt, bhi_pt);
  }
  // Intersection of [0, len] with [blo, bhi].
  S ilo = blo;
  Vec3<S> ilo_pt = blo_pt;
  if (detail::sign_of(ilo) < 0) {
    ilo = zero;
    ilo_pt = a0;
  }
  S ihi = bhi;
  Vec3<S> ihi_pt = bhi_pt;
  if (detail::sign_of(ihi - len) > 0) {
    ihi = len;
    ihi_pt = a1;
  }
  int cmp = detail::sign_of(ihi - ilo);
  if (cmp < 0) return out;
  if (cmp == 0) {
    out.kind = K::point;
    out.point = ilo_pt;
    out.interior_first =
        detail::sign_of(ilo) > 0 && detail::sign_of(len - ilo) > 0;
    out.interior_second =
        detail::sign_of(ilo - blo) > 0 && detail::sign_of(bhi - ilo) > 0;
    return out;
  }
  out.kind = K::overlap;
  out.overlap_a = ilo_pt;
  out.overlap_b = ihi_pt;
  return out;
}

/// True when [a0,a1] and [b0,b1] lie on one common line.
template <class S>
bool segments_collinear_3d(const Vec3<S>& a0, const Vec3<S>& a1, const Vec3<S>& b0,
                           const Vec3<S>& b1) {
  Vec3<S> d1 = a1 - a0;
  return detail::is_zero_vec(d1.cross(b1 - b0)) &&
         detail::is_zero_vec(d1.cross(b0 - a0));
}

}  // namespace quadlab
