#include "tecsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include "tecsim/errors.hpp"
#include "tecsim/keyvalue.hpp"
#include "tecsim/params_io.hpp"

namespace tecsim {

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::hold: return "hold";
    case ScenarioKind::altitude_step: return "altitude_step";
    case ScenarioKind::airspeed_step: return "airspeed_step";
    case ScenarioKind::turbulence_onset: return "turbulence_onset";
  }
  return "unknown";
}

std::string_view to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::tec_classic: return "tec_classic";
    case ControllerKind::ladrc_tec: return "ladrc_tec";
  }
  return "unknown";
}

std::string_view to_string(RateSource source) {
  switch (source) {
    case RateSource::true_derivative: return "true_derivative";
    case RateSource::difference: return "difference";
  }
  return "unknown";
}

ScenarioKind parse_scenario_kind(const std::string& text) {
  for (auto k : {ScenarioKind::hold, ScenarioKind::altitude_step, ScenarioKind::airspeed_step,
                 ScenarioKind::turbulence_onset}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown scenario kind '" + text + "'", "kind");
}

ControllerKind parse_controller_kind(const std::string& text) {
  for (auto k : {ControllerKind::tec_classic, ControllerKind::ladrc_tec}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown controller '" + text + "'", "controller");
}

RateSource parse_rate_source(const std::string& text) {
  for (auto k : {RateSource::true_derivative, RateSource::difference}) {
    if (text == to_string(k)) return k;
  }
  throw ConfigError("unknown rate_source '" + text + "'", "rate_source");
}

void RunConfig::validate() const {
  const ScenarioConfig& s = scenario;
  auto fail = [](const std::string& what, const std::string& key) { throw ConfigError(what, key); };
  if (!(s.dt > 0.0)) fail("scenario.dt must be > 0", "dt");
  if (!(s.duration > 0.0)) fail("scenario.duration must be > 0", "duration");
  if (!(s.step_time >= 0.0 && s.step_time < s.duration)) {
    fail("scenario.step_time must lie in [0, duration)", "step_time");
  }
  if (!(s.cruise_airspeed > kMinEnergyAirspeed)) fail("scenario.cruise_airspeed too low", "cruise_airspeed");
  if (s.seeds < 1) fail("scenario.seeds must be >= 1", "seeds");
  if ((s.kind == ScenarioKind::altitude_step || s.kind == ScenarioKind::airspeed_step) &&
      s.step == 0.0) {
    fail("scenario.step must be nonzero for step scenarios", "step");
  }
  if (s.kind == ScenarioKind::turbulence_onset &&
      !(turbulence.onset >= 0.0 && turbulence.onset < s.duration)) {
    fail("turbulence.onset must lie in [0, duration)", "onset");
  }
  const double steps = s.duration / s.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps) {
    fail("scenario.duration must be an integer multiple of dt", "duration");
  }
  if (!(controller.ladrc.omega_o * s.dt < 0.5)) {
    fail("controller.ladrc.omega_o * dt must be < 0.5", "omega_o");
  }
  if (!(controller.guidance.k_V > 0.0)) fail("guidance.k_V must be > 0", "k_V");
  if (!(controller.guidance.k_h > 0.0)) fail("guidance.k_h must be > 0", "k_h");
  airframe.validate();
}

RunConfig default_run_config(const AirframeParams& airframe) {
  RunConfig config;
  config.airframe = airframe;
  config.controller.tec = TecClassicGains::defaults_for(airframe);
  config.controller.pitch.delta_e_max = airframe.delta_e_max;
  config.controller.lateral.delta_a_max = airframe.delta_a_max;
  config.controller.lateral.delta_r_max = airframe.delta_r_max;
  return config;
}

namespace {

using Setter = std::function<void(const std::string& key, const std::string& value)>;
using SectionTable = std::map<std::string, Setter>;

Setter real(double& target) {
  return [&target](const std::string& k, const std::string& v) { target = parse_double(k, v); };
}
Setter boolean(bool& target) {
  return [&target](const std::string& k, const std::string& v) { target = parse_bool(k, v); };
}

void apply_section(const KeyValueSection& section, const SectionTable& table) {
  for (const auto& [key, value] : section.entries) {
    auto it = table.find(key);
    if (it == table.end()) {
      throw ConfigError("unknown key '" + key + "' in section [" + section.name + "]", key);
    }
    it->second(key, value);
  }
}

SectionTable scenario_table(ScenarioConfig& s) {
  return {
      {"name", [&s](const std::string&, const std::string& v) { s.name = v; }},
      {"kind", [&s](const std::string&, const std::string& v) { s.kind = parse_scenario_kind(v); }},
      {"controller",
       [&s](const std::string&, const std::string& v) { s.controller = parse_controller_kind(v); }},
      {"cruise_airspeed", real(s.cruise_airspeed)},
      {"cruise_altitude", real(s.cruise_altitude)},
      {"step", real(s.step)},
      {"step_time", real(s.step_time)},
      {"duration", real(s.duration)},
      {"dt", real(s.dt)},
      {"heading", real(s.heading)},
      {"seed",
       [&s](const std::string& k, const std::string& v) {
         const long long n = parse_integer(k, v);
         if (n < 0) throw ConfigError("key 'seed' must be >= 0", k);
         s.seed = static_cast<std::uint64_t>(n);
       }},
      {"seeds",
       [&s](const std::string& k, const std::string& v) { s.seeds = static_cast<int>(parse_integer(k, v)); }},
  };
}

SectionTable turbulence_table(TurbulenceConfig& t) {
  return {
      {"onset", real(t.onset)},
      {"sigma_u", real(t.dryden.sigma_u)},
      {"sigma_w", real(t.dryden.sigma_w)},
      {"L_u", real(t.dryden.L_u)},
      {"L_w", real(t.dryden.L_w)},
      {"V_a_ref", real(t.dryden.V_a_ref)},
  };
}

SectionTable tec_table(TecClassicGains& g) {
  return {
      {"k_Ep", real(g.k_Ep)},
      {"k_Ei", real(g.k_Ei)},
      {"k_Bp", real(g.k_Bp)},
      {"k_Bi", real(g.k_Bi)},
      {"theta_max", real(g.theta_max)},
      {"theta_rate_limit", real(g.theta_rate_limit)},
      {"thrust_integral_limit", real(g.thrust_integral_limit)},
      {"pitch_integral_limit", real(g.pitch_integral_limit)},
      {"saturate", boolean(g.saturate)},
      {"anti_windup", boolean(g.anti_windup)},
  };
}

SectionTable ladrc_table(LadrcTecGains& g) {
  return {
      {"k_E", real(g.k_E)},
      {"k_B", real(g.k_B)},
      {"b_E", real(g.b_E)},
      {"b_B", real(g.b_B)},
      {"omega_o", real(g.omega_o)},
      {"theta_max", real(g.theta_max)},
      {"theta_rate_limit", real(g.theta_rate_limit)},
      {"throttle_rate_limit", real(g.throttle_rate_limit)},
      {"disturbance_feedforward", boolean(g.disturbance_feedforward)},
      {"divergence_bound", real(g.divergence_bound)},
  };
}

SectionTable guidance_table(ControllerConfig& c) {
  return {
      {"k_V", real(c.guidance.k_V)},
      {"k_h", real(c.guidance.k_h)},
      {"max_climb_rate", real(c.guidance.max_climb_rate)},
      {"max_acceleration", real(c.guidance.max_acceleration)},
      {"rate_source",
       [&c](const std::string&, const std::string& v) { c.rate_source = parse_rate_source(v); }},
      {"rate_filter_tau", real(c.rate_filter_tau)},
  };
}

SectionTable inner_loop_table(ControllerConfig& c) {
  return {
      {"k_p_theta", real(c.pitch.k_p)},
      {"k_i_theta", real(c.pitch.k_i)},
      {"k_d_theta", real(c.pitch.k_d)},
      {"elevator_slew_rate", real(c.pitch.slew_rate)},
      {"k_p_phi", real(c.lateral.k_p_phi)},
      {"k_d_phi", real(c.lateral.k_d_phi)},
      {"k_psi", real(c.lateral.k_psi)},
      {"phi_max", real(c.lateral.phi_max)},
      {"k_yaw_damper", real(c.lateral.k_yaw_damper)},
  };
}

}  // namespace

RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir,
                           const std::string& source) {
  const KeyValueDocument doc = parse_key_value(in, source);

  for (const KeyValueSection& section : doc) {
    static const char* known[] = {"scenario",   "turbulence",       "airframe", "controller.tec",
                                  "controller.ladrc", "guidance", "inner_loop"};
    if (section.name.empty()) {
      throw ConfigError(source + ": key '" + section.entries.front().first +
                            "' appears before any section header",
                        section.entries.front().first);
    }
    if (std::find(std::begin(known), std::end(known), section.name) == std::end(known)) {
      throw ConfigError(source + ": unknown section [" + section.name + "]", section.name);
    }
  }

  // The airframe comes first: classical gains and actuator limits scale with it.
  AirframeParams airframe = AirframeParams::aerosonde();
  std::string airframe_source = "builtin:aerosonde";
  for (const KeyValueSection& section : doc) {
    if (section.name != "airframe") continue;
    KeyValueSection overrides{section.name, {}};
    for (const auto& [key, value] : section.entries) {
      if (key == "params_file") {
        std::filesystem::path p(value);
        if (p.is_relative()) p = base_dir / p;
        airframe = load_airframe_file(p);
        airframe_source = p.string();
      } else {
        overrides.entries.emplace_back(key, value);
      }
    }
    apply_airframe_entries(airframe, overrides);
  }

  RunConfig config = default_run_config(airframe);
  config.airframe_source = airframe_source;
  for (const KeyValueSection& section : doc) {
    if (section.name == "scenario") apply_section(section, scenario_table(config.scenario));
    if (section.name == "turbulence") apply_section(section, turbulence_table(config.turbulence));
    if (section.name == "controller.tec") apply_section(section, tec_table(config.controller.tec));
    if (section.name == "controller.ladrc") apply_section(section, ladrc_table(config.controller.ladrc));
    if (section.name == "guidance") apply_section(section, guidance_table(config.controller));
    if (section.name == "inner_loop") apply_section(section, inner_loop_table(config.controller));
  }
  config.validate();
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  return parse_run_config(in, path.parent_path(), path.string());
}

}  // namespace tecsim
