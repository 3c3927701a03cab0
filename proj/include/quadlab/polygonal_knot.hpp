#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quadlab/geometry.hpp"
#include "quadlab/segment_predicates.hpp"

namespace quadlab {

/// Closed polygonal curve in R^3 with exact rational vertices.
///
/// Vertices are indexed 0..n-1; edge i runs from vertex i to vertex i+1 mod n.
/// Construction validates n >= 3 and that consecutive vertices are distinct;
/// embeddedness is a separate check (is_simple).
class PolygonalKnot {
 public:
  PolygonalKnot(std::vector<Vec3q> vertices, std::string name = "");

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Vec3q& vertex(int i) const { return vertices_[mod(i)]; }
  const std::vector<Vec3q>& vertices() const { return vertices_; }

  /// Edge vector v_i = V_{i+1} - V_i.
  Vec3q edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
  /// Point V_i + t * v_i.
  Vec3q point_on_edge(int i, const Rational& t) const {
    return vertex(i) + edge_vector(i) * t;
  }

  PolygonalKnot reversed() const;
  PolygonalKnot cycled(int offset) const;
  PolygonalKnot transformed(const AffineMap& map) const;

 private:
  int mod(int i) const {
    int n = size();
    return ((i % n) + n) % n;
  }

  std::vector<Vec3q> vertices_;
  std::string name_;
};

/// Outcome of the exact general-position checks:
/// (a') every four vertices affinely independent (no four coplanar), tested
///      through the alternating determinant sum;
/// (b') every three edge vectors linearly independent.
struct GeneralPositionReport {
  std::vector<std::array<int, 4>> coplanar_violations;   // vertex index 4-tuples
  std::vector<std::array<int, 3>> dependent_violations;  // edge index triples
  bool passed = false;
};

GeneralPositionReport check_general_position(const PolygonalKnot& k);

/// Embeddedness witness: the first offending edge pair in lexicographic
/// order, with the kind of contact.
struct SimplicityReport {
  bool simple = true;
  int edge_a = -1;
  int edge_b = -1;
  enum class Contact { none, crossing, overlap } contact = Contact::none;
};

SimplicityReport is_simple(const PolygonalKnot& k);

}  // namespace quadlab
