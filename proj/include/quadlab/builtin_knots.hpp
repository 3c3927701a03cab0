#pragma once

#include <string>
#include <vector>

#include "quadlab/polygonal_knot.hpp"

namespace quadlab {

/// Catalog of built-in knots with exact rational coordinates.
///
///   k6                 hexagonal unknot whose single quadrisecant is the
///                      x-axis; its secant-point approximation degenerates
///   k6_triangle_stage  the 6-vertex triangle-with-notch it is derived from
///   k0                 the 14-vertex primary knot (intentionally not in
///                      general position: several vertex quadruples are
///                      collinear by construction)
///   k14                the perturbed 14-vertex unknot, derived from k0 by
///                      the shrink/extend formulas evaluated symbolically
///   k14_remark         k14 rebuilt after moving two primary vertices so its
///                      four quadrisecants become pairwise disjoint
PolygonalKnot builtin_knot(const std::string& name);

std::vector<std::string> builtin_knot_names();

/// The shrink/extend derivation that produces the 14-vertex final knot from
/// 14 primary vertices (exposed so variants can reuse it).
PolygonalKnot derive_final_14(const std::vector<Vec3q>& primary, const std::string& name);

}  // namespace quadlab
