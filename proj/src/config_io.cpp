#include "fatpoints/config_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "fatpoints/catalog.hpp"

namespace fatpoints {

namespace {

using nlohmann::json;

Rational coordinate(const json& value, const std::string& field) {
  if (!value.is_string()) throw ConfigError(field + ": expected a string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field + ": " + e.what());
  }
}

ProjCoord proj_coord(const json& value, const std::string& field) {
  if (!value.is_array() || value.size() != 2) {
    throw ConfigError(field + ": expected a pair [\"u\", \"v\"]");
  }
  const Rational u = coordinate(value[0], field + "[0]");
  const Rational v = coordinate(value[1], field + "[1]");
  try {
    return ProjCoord(u, v);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field + ": " + e.what());
  }
}

json coord_json(const ProjCoord& c) { return json::array({to_string(c.u()), to_string(c.v())}); }

}  // namespace

FatPointConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("top level: expected an object");
  if (!doc.contains("points")) throw ConfigError("top level: missing field 'points'");
  const json& points = doc.at("points");
  if (!points.is_array()) throw ConfigError("points: expected an array");
  std::vector<ProductPoint> pts;
  std::vector<int> mults;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const json& p = points[i];
    if (!p.is_object()) throw ConfigError(field + ": expected an object");
    for (const auto& [key, _] : p.items()) {
      if (key != "x" && key != "y" && key != "m") {
        throw ConfigError(field + ": unknown field '" + key + "'");
      }
    }
    if (!p.contains("x")) throw ConfigError(field + ": missing field 'x'");
    if (!p.contains("y")) throw ConfigError(field + ": missing field 'y'");
    pts.push_back({proj_coord(p.at("x"), field + ".x"), proj_coord(p.at("y"), field + ".y")});
    int m = 1;
    if (p.contains("m")) {
      const json& mv = p.at("m");
      if (!mv.is_number_integer() || mv.get<long long>() < 1 || mv.get<long long>() > 1'000'000) {
        throw ConfigError(field + ".m: expected a positive integer");
      }
      m = mv.get<int>();
    }
    mults.push_back(m);
  }
  try {
    return make_config(std::move(pts), std::move(mults));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("points: ") + e.what());
  }
}

FatPointConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(e.what());
  }
  return config_from_json(doc);
}

json config_to_json(const FatPointConfig& z) {
  json points = json::array();
  for (std::size_t i = 0; i < z.size(); ++i) {
    points.push_back({{"x", coord_json(z.points()[i].x)},
                      {"y", coord_json(z.points()[i].y)},
                      {"m", z.mults()[i]}});
  }
  return json{{"points", points}};
}

std::optional<FatPointConfig> named_config(std::string_view name) {
  if (name == "single-point") return catalog::single_point();
  if (name == "five-jumps-sharp") return catalog::five_jumps_sharp();
  if (name == "plus-jump-two") return catalog::plus_jump_two();
  static const std::regex grid(R"(grid-([1-9][0-9]?)-([1-9][0-9]?))");
  static const std::regex minus(R"(grid-minus-point-([1-9][0-9]?))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_match(name.begin(), name.end(), m, grid)) {
    return catalog::grid(std::stoi(m[1].str()), std::stoi(m[2].str()));
  }
  if (std::regex_match(name.begin(), name.end(), m, minus)) {
    return catalog::grid_minus_point(std::stoi(m[1].str()));
  }
  return std::nullopt;
}

FatPointConfig load_config(const std::string& source) {
  if (auto z = named_config(source)) return *z;
  std::ifstream in(source);
  if (!in) throw ConfigError(source + ": not a built-in configuration or readable file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

}  // namespace fatpoints
