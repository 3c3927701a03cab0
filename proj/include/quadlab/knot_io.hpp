#pragma once

#include <string>

#include <json.hpp>

#include "quadlab/algebraic_number.hpp"
#include "quadlab/polygonal_knot.hpp"

namespace quadlab {

/// Knot file format: {"name": string, "vertices": [["x","y","z"], ...]}
/// with coordinates as rational strings; integers and decimal literals are
/// accepted on input and normalized to exact rationals.
PolygonalKnot load_knot(const std::string& path);
void save_knot(const PolygonalKnot& k, const std::string& path);

nlohmann::json knot_to_json(const PolygonalKnot& k);
PolygonalKnot knot_from_json(const nlohmann::json& j);

nlohmann::json algebraic_to_json(const AlgebraicNumber& x);
AlgebraicNumber algebraic_from_json(const nlohmann::json& j);

}  // namespace quadlab
