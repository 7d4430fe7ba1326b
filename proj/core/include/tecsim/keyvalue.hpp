#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace tecsim {

/// One `[section]` of an INI-style file, entries in file order.
struct KeyValueSection {
  std::string name;  ///< empty for keys that precede the first section header
  std::vector<std::pair<std::string, std::string>> entries;
};

using KeyValueDocument = std::vector<KeyValueSection>;

/// Parses `key = value` lines grouped under `[section]` headers; `;` starts a
/// comment line. Duplicate keys are rejected. Throws ConfigError.
KeyValueDocument parse_key_value(std::istream& in, const std::string& source = "<stream>");
KeyValueDocument read_key_value_file(const std::filesystem::path& path);

/// Strict numeric conversions; the key is used for error reporting only.
double parse_double(const std::string& key, const std::string& text);
long long parse_integer(const std::string& key, const std::string& text);
bool parse_bool(const std::string& key, const std::string& text);

}  // namespace tecsim
