#include "ehrhart/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ehrhart {

Polytope parse_polytope_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("polytope file: invalid JSON: ") + e.what());
  }
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer())
    throw std::invalid_argument("polytope file: missing integer field 'ambient_dim'");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("polytope file: missing array field 'vertices'");

  const Index n = doc["ambient_dim"].get<Index>();
  const auto& rows = doc["vertices"];
  if (rows.empty())
    throw std::invalid_argument("polytope file: empty vertex list");

  std::vector<QVector> points;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw std::invalid_argument(
          "polytope file: vertex row '" + row.dump() +
          "' does not have ambient_dim = " + std::to_string(n) + " entries");
    }
    QVector v(n);
    Index i = 0;
    for (const auto& entry : row) {
      if (!entry.is_string())
        throw std::invalid_argument("polytope file: coordinate " + entry.dump() +
                                    " is not a rational string");
      v(i++) = parse_rational(entry.get<std::string>());
    }
    points.push_back(std::move(v));
  }
  return build_polytope(points);
}

Polytope parse_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope_json(buf.str());
}

std::string serialize_polytope(const Polytope& p) {
  nlohmann::json doc;
  doc["ambient_dim"] = p.ambient_dim;
  nlohmann::json rows = nlohmann::json::array();
  for (const QVector& v : p.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
    rows.push_back(std::move(row));
  }
  doc["vertices"] = std::move(rows);
  return doc.dump();
}

}  // namespace ehrhart
