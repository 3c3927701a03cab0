#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "quadlab/algebraic_number.hpp"
#include "quadlab/exact_ops.hpp"
#include "quadlab/polygonal_knot.hpp"

namespace quadlab {

/// Four edge indices in strictly increasing order.
struct EdgeQuadruple {
  int i = 0, j = 1, k = 2, l = 3;
  friend bool operator==(const EdgeQuadruple&, const EdgeQuadruple&) = default;
};

/// One intersection of a line with the knot: a point on an edge at an exact
/// parameter in [0,1) (the half-open convention: the initial vertex of the
/// edge counts, the terminal one belongs to the next edge).
struct SecantRecord {
  int edge = 0;
  AlgebraicNumber parameter;
  Vec3a point = Vec3a::Zero();
};

/// A line meeting the knot in exactly four points, with its exact secant
/// records in increasing edge order and the quadratic root it came from.
struct Quadrisecant {
  std::array<SecantRecord, 4> secants;
  Vec3a anchor = Vec3a::Zero();
  Vec3a direction = Vec3a::Zero();
  AlgebraicNumber x_root;
  Rational radicand;  // 0 when the root is rational
};

struct DegeneracyReport {
  enum class Kind { adjacent_collapse, planar_ruled_surface, quadric_family, infinite_solutions };
  Kind kind = Kind::infinite_solutions;
  // Witness indices; l is -1 when the witness is an edge triple.
  std::array<int, 4> witness = {-1, -1, -1, -1};
};

struct InfiniteFamilyError : std::runtime_error {
  explicit InfiniteFamilyError(EdgeQuadruple q)
      : std::runtime_error("infinitely many transversals for one edge quadruple"), quad(q) {}
  EdgeQuadruple quad;
};

struct QuintisecantError : std::runtime_error {
  explicit QuintisecantError(int records)
      : std::runtime_error("a line meets the knot in " + std::to_string(records) +
                           " points; the approximation is not well-defined"),
        record_count(records) {}
  int record_count;
};

/// Rational data of the one-quadruple elimination. The transversal
/// parameters of the four edge lines are exactly the roots x of
/// A x^2 + B x + C outside {0, 1} (coefficients normalized to coprime
/// integers, leading sign positive).
struct QuadrupleCoefficients {
  Rational A, B, C;
  // p(x) = a1/(1-x) + b1, q(x) = a2 (x-1)/x + b2 on the (i,j,k) side;
  // p(y) = c1/(1-y) + e1, q(y) = c2 (y-1)/y + e2 on the (i,j,l) side;
  // r(x) = r1 x + r0, s(y) = s1 y + s0.
  Rational a1, b1, a2, b2, c1, e1, c2, e2, r1, r0, s1, s0;
};

/// Throws std::domain_error when a guard determinant vanishes, which under
/// the general-position precondition cannot happen (caller bug).
QuadrupleCoefficients quadruple_coefficients(const PolygonalKnot& k, const EdgeQuadruple& q);

using QuadrupleResult = std::variant<std::vector<Quadrisecant>, DegeneracyReport>;

QuadrupleResult solve_quadruple(const PolygonalKnot& k, const EdgeQuadruple& q);

struct SolverOptions {
  int threads = 0;  // 0 = hardware concurrency
};

/// Enumerates all quadrisecants over the C(n,4) edge quadruples, merges
/// duplicate lines exactly and returns them in canonical order
/// (lexicographic by the sorted (edge, parameter) sequence).
/// Pre: k passes check_general_position and is_simple.
/// Throws InfiniteFamilyError / QuintisecantError on the degenerate cases.
std::vector<Quadrisecant> find_all_quadrisecants(const PolygonalKnot& k,
                                                 const SolverOptions& opts = {});

/// Exact line identity: parallel directions and parallel anchor offset.
bool same_line(const Quadrisecant& a, const Quadrisecant& b);

/// One-parameter family of lines through three fixed edge lines.
struct TransversalFamily {
  enum class Kind {
    impossible,  // both key determinants vanish: transversal pinned to shared vertices
    planar,      // one vanishes: the family sweeps part of a plane
    quadric,     // none vanishes: the family sweeps a quadric
  };
  Kind kind = Kind::quadric;
  int ei = 0, ej = 0, ek = 0;
  Rational a1, b1, a2, b2, r1, r0;
  Vec3q Vi, vi, Vj, vj, Vk, vk;

  struct Sample {
    Rational p, q, r;
    Vec3q point_i, point_j, point_k;
  };
  /// Exact sample at rational x (x outside {0,1}); nullopt at the poles.
  std::optional<Sample> at(const Rational& x) const;

  struct DoubleSample {
    double p, q, r;
    Vec3d point_i, point_j, point_k;
  };
  std::optional<DoubleSample> at(double x) const;
};

/// Pre: the triple satisfies (b'). Throws std::domain_error otherwise.
TransversalFamily transversal_family(const PolygonalKnot& k, int ei, int ej, int ek);

}  // namespace quadlab
