#include "quadlab/knot_io.hpp"

#include <fstream>
#include <stdexcept>

namespace quadlab {

namespace {

Rational coord_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    // Round-trip through the shortest decimal text so 0.1 becomes 1/10.
    return Rational::parse(nlohmann::json(j.get<double>()).dump());
  }
  throw std::invalid_argument("knot file: coordinate must be a string or number");
}

}  // namespace

nlohmann::json knot_to_json(const PolygonalKnot& k) {
  nlohmann::json j;
  j["name"] = k.name();
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : k.vertices())
    verts.push_back({v.x().str(), v.y().str(), v.z().str()});
  j["vertices"] = std::move(verts);
  return j;
}

PolygonalKnot knot_from_json(const nlohmann::json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("knot file: missing \"vertices\" array");
  std::vector<Vec3q> vertices;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("knot file: each vertex must be a 3-element array");
    vertices.emplace_back(coord_from_json(row[0]), coord_from_json(row[1]),
                          coord_from_json(row[2]));
  }
  std::string name = j.value("name", "");
  return PolygonalKnot(std::move(vertices), name);
}

PolygonalKnot load_knot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open knot file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return knot_from_json(j);
}

void save_knot(const PolygonalKnot& k, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write knot file: " + path);
  out << knot_to_json(k).dump(2) << "\n";
}

nlohmann::json algebraic_to_json(const AlgebraicNumber& x) {
  return {{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.d().str()}};
}

AlgebraicNumber algebraic_from_json(const nlohmann::json& j) {
  return AlgebraicNumber(Rational::parse(j.at("a").get<std::string>()),
                         Rational::parse(j.at("b").get<std::string>()),
                         Rational::parse(j.at("d").get<std::string>()));
}

}  // namespace quadlab
