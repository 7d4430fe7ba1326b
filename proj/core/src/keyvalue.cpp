#include "tecsim/keyvalue.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>

#include "tecsim/errors.hpp"

namespace tecsim {

namespace pt = boost::property_tree;

KeyValueDocument parse_key_value(std::istream& in, const std::string& source) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  KeyValueDocument doc;
  KeyValueSection top;
  for (const auto& [name, child] : tree) {
    if (child.empty()) {
      top.entries.emplace_back(name, child.data());
      continue;
    }
    KeyValueSection section;
    section.name = name;
    for (const auto& [key, value] : child) {
      section.entries.emplace_back(key, value.data());
    }
    doc.push_back(std::move(section));
  }
  if (!top.entries.empty()) {
    doc.insert(doc.begin(), std::move(top));
  }
  return doc;
}

KeyValueDocument read_key_value_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  return parse_key_value(in, path.string());
}

double parse_double(const std::string& key, const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ConfigError("key '" + key + "': expected a finite number, got '" + text + "'", key);
  }
  return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
  long long value = 0;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'", key);
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("key '" + key + "': expected true/false, got '" + text + "'", key);
}

}  // namespace tecsim
