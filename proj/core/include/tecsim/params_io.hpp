#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tecsim/airframe.hpp"
#include "tecsim/keyvalue.hpp"

namespace tecsim {

/// Names of every key accepted in an airframe parameter section.
const std::vector<std::string>& airframe_keys();

/// Applies `entries` on top of `params`. Unknown keys throw ConfigError naming
/// the key. Derived terms are refreshed and the result validated.
void apply_airframe_entries(AirframeParams& params, const KeyValueSection& entries);

/// Loads an airframe parameter file. The file holds one `[airframe]` section
/// (or bare keys); every key not present keeps the Aerosonde default.
AirframeParams load_airframe_file(const std::filesystem::path& path);

/// Serializes all raw airframe fields as an `[airframe]` section.
std::string format_airframe(const AirframeParams& params);

}  // namespace tecsim
