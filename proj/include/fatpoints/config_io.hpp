#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fatpoints/geometry.hpp"

namespace fatpoints {

/// Malformed configuration input; the message names the offending line or
/// field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"points": [{"x": ["1","0"], "y": ["1","1"], "m": 1}, ...]}
/// Coordinates are decimal integers or "p/q" strings; m defaults to 1.
FatPointConfig parse_config(std::string_view text);
FatPointConfig config_from_json(const nlohmann::json& doc);

nlohmann::json config_to_json(const FatPointConfig& z);

/// Built-in configurations: single-point, five-jumps-sharp,
/// plus-jump-two, grid-A-B, grid-minus-point-A.
std::optional<FatPointConfig> named_config(std::string_view name);

/// A built-in name or a path to a configuration file.
FatPointConfig load_config(const std::string& source);

}  // namespace fatpoints
