#include "quadlab/polygonal_knot.hpp"

#include <stdexcept>

namespace quadlab {

PolygonalKnot::PolygonalKnot(std::vector<Vec3q> vertices, std::string name)
    : vertices_(std::move(vertices)), name_(std::move(name)) {
  int n = size();
  if (n < 3) throw std::invalid_argument("PolygonalKnot: need at least 3 vertices");
  for (int i = 0; i < n; ++i) {
    Vec3q d = vertices_[(i + 1) % n] - vertices_[i];
    if (d.x().is_zero() && d.y().is_zero() && d.z().is_zero())
      throw std::invalid_argument("PolygonalKnot: repeated consecutive vertex at index " +
                                  std::to_string(i));
  }
}

PolygonalKnot PolygonalKnot::reversed() const {
  std::vector<Vec3q> v(vertices_.rbegin(), vertices_.rend());
  return PolygonalKnot(std::move(v), name_);
}

PolygonalKnot PolygonalKnot::cycled(int offset) const {
  int n = size();
  std::vector<Vec3q> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(vertex(i + offset));
  return PolygonalKnot(std::move(v), name_);
}

PolygonalKnot PolygonalKnot::transformed(const AffineMap& map) const {
  std::vector<Vec3q> v;
  v.reserve(size());
  for (const auto& p : vertices_) v.push_back(map(p));
  return PolygonalKnot(std::move(v), name_);
}

GeneralPositionReport check_general_position(const PolygonalKnot& k) {
  GeneralPositionReport rep;
  int n = k.size();

  // (a'): Det(Vj,Vk,Vl) - Det(Vi,Vk,Vl) + Det(Vi,Vj,Vl) - Det(Vi,Vj,Vk) != 0.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int kk = j + 1; kk < n; ++kk)
        for (int l = kk + 1; l < n; ++l) {
          const Vec3q &vi = k.vertex(i), &vj = k.vertex(j), &vk = k.vertex(kk),
                      &vl = k.vertex(l);
          Rational s = det3(vj, vk, vl) - det3(vi, vk, vl) + det3(vi, vj, vl) -
                       det3(vi, vj, vk);
          if (s.is_zero()) rep.coplanar_violations.push_back({i, j, kk, l});
        }

  // (b'): Det(v_i, v_j, v_k) != 0 for every edge triple.
  std::vector<Vec3q> ev;
  ev.reserve(n);
  for (int i = 0; i < n; ++i) ev.push_back(k.edge_vector(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int kk = j + 1; kk < n; ++kk)
        if (det3(ev[i], ev[j], ev[kk]).is_zero())
          rep.dependent_violations.push_back({i, j, kk});

  rep.passed = rep.coplanar_violations.empty() && rep.dependent_violations.empty();
  return rep;
}

SimplicityReport is_simple(const PolygonalKnot& k) {
  SimplicityReport rep;
  int n = k.size();
  using SI = SegmentIntersection<Rational>;
  for (int i = 0; i < n && rep.simple; ++i) {
    for (int j = i + 1; j < n && rep.simple; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const Vec3q a0 = k.vertex(i), a1 = k.vertex(i + 1);
      const Vec3q b0 = k.vertex(j), b1 = k.vertex(j + 1);
      if (adjacent) {
        // Non-collinear adjacent edges can only meet at the shared vertex;
        // collinear ones are legal iff they touch in exactly that point.
        if (!segments_collinear_3d(a0, a1, b0, b1)) continue;
        SI si = segment_intersect_3d(a0, a1, b0, b1);
        if (si.kind == SI::Kind::overlap) {
          rep.simple = false;
          rep.edge_a = i;
          rep.edge_b = j;
          rep.contact = SimplicityReport::Contact::overlap;
        }
      } else {
        SI si = segment_intersect_3d(a0, a1, b0, b1);
        if (si.kind != SI::Kind::none) {
          rep.simple = false;
          rep.edge_a = i;
          rep.edge_b = j;
          rep.contact = si.kind == SI::Kind::overlap
                            ? SimplicityReport::Contact::overlap
                            : SimplicityReport::Contact::crossing;
        }
      }
    }
  }
  return rep;
}

}  // namespace quadlab
