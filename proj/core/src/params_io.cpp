#include "tecsim/params_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>

#include "tecsim/errors.hpp"

namespace tecsim {

namespace {

using Field = double AirframeParams::*;

const std::vector<std::pair<std::string, Field>>& field_table() {
  static const std::vector<std::pair<std::string, Field>> table = {
      {"m", &AirframeParams::m},
      {"g", &AirframeParams::g},
      {"Jx", &AirframeParams::Jx},
      {"Jy", &AirframeParams::Jy},
      {"Jz", &AirframeParams::Jz},
      {"Jxz", &AirframeParams::Jxz},
      {"rho", &AirframeParams::rho},
      {"S", &AirframeParams::S},
      {"b_span", &AirframeParams::b_span},
      {"c_chord", &AirframeParams::c_chord},
      {"C_L0", &AirframeParams::C_L0},
      {"C_L_alpha", &AirframeParams::C_L_alpha},
      {"C_L_q", &AirframeParams::C_L_q},
      {"C_L_delta_e", &AirframeParams::C_L_delta_e},
      {"C_D0", &AirframeParams::C_D0},
      {"C_D_alpha", &AirframeParams::C_D_alpha},
      {"C_D_q", &AirframeParams::C_D_q},
      {"C_D_delta_e", &AirframeParams::C_D_delta_e},
      {"C_D_p", &AirframeParams::C_D_p},
      {"e_oswald", &AirframeParams::e_oswald},
      {"C_m0", &AirframeParams::C_m0},
      {"C_m_alpha", &AirframeParams::C_m_alpha},
      {"C_m_q", &AirframeParams::C_m_q},
      {"C_m_delta_e", &AirframeParams::C_m_delta_e},
      {"C_Y0", &AirframeParams::C_Y0},
      {"C_Y_beta", &AirframeParams::C_Y_beta},
      {"C_Y_p", &AirframeParams::C_Y_p},
      {"C_Y_r", &AirframeParams::C_Y_r},
      {"C_Y_delta_a", &AirframeParams::C_Y_delta_a},
      {"C_Y_delta_r", &AirframeParams::C_Y_delta_r},
      {"C_l0", &AirframeParams::C_l0},
      {"C_l_beta", &AirframeParams::C_l_beta},
      {"C_l_p", &AirframeParams::C_l_p},
      {"C_l_r", &AirframeParams::C_l_r},
      {"C_l_delta_a", &AirframeParams::C_l_delta_a},
      {"C_l_delta_r", &AirframeParams::C_l_delta_r},
      {"C_n0", &AirframeParams::C_n0},
      {"C_n_beta", &AirframeParams::C_n_beta},
      {"C_n_p", &AirframeParams::C_n_p},
      {"C_n_r", &AirframeParams::C_n_r},
      {"C_n_delta_a", &AirframeParams::C_n_delta_a},
      {"C_n_delta_r", &AirframeParams::C_n_delta_r},
      {"S_prop", &AirframeParams::S_prop},
      {"C_prop", &AirframeParams::C_prop},
      {"k_motor", &AirframeParams::k_motor},
      {"alpha_max", &AirframeParams::alpha_max},
      {"delta_e_max", &AirframeParams::delta_e_max},
      {"delta_a_max", &AirframeParams::delta_a_max},
      {"delta_r_max", &AirframeParams::delta_r_max},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& airframe_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [name, field] : field_table()) out.push_back(name);
    return out;
  }();
  return keys;
}

void apply_airframe_entries(AirframeParams& params, const KeyValueSection& section) {
  const auto& table = field_table();
  for (const auto& [key, value] : section.entries) {
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == key; });
    if (it == table.end()) {
      throw ConfigError("unknown airframe key '" + key + "'", key);
    }
    params.*(it->second) = parse_double(key, value);
  }
  params.update_derived();
  params.validate();
}

AirframeParams load_airframe_file(const std::filesystem::path& path) {
  const KeyValueDocument doc = read_key_value_file(path);
  AirframeParams params = AirframeParams::aerosonde();
  for (const KeyValueSection& section : doc) {
    if (!section.name.empty() && section.name != "airframe") {
      throw ConfigError(path.string() + ": unknown section [" + section.name + "]", section.name);
    }
    apply_airframe_entries(params, section);
  }
  params.update_derived();
  params.validate();
  return params;
}

std::string format_airframe(const AirframeParams& params) {
  std::ostringstream out;
  out << "[airframe]\n";
  char buf[64];
  for (const auto& [name, field] : field_table()) {
    std::snprintf(buf, sizeof(buf), "%.17g", params.*field);
    out << name << " = " << buf << "\n";
  }
  return out.str();
}

}  // namespace tecsim
