#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "tecsim/airframe.hpp"
#include "tecsim/dryden.hpp"
#include "tecsim/energy.hpp"
#include "tecsim/inner_loop.hpp"
#include "tecsim/ladrc_tec.hpp"
#include "tecsim/tec_classic.hpp"

namespace tecsim {

enum class ScenarioKind { hold, altitude_step, airspeed_step, turbulence_onset };
enum class ControllerKind { tec_classic, ladrc_tec };
enum class RateSource { true_derivative, difference };

std::string_view to_string(ScenarioKind kind);
std::string_view to_string(ControllerKind kind);
std::string_view to_string(RateSource source);
ScenarioKind parse_scenario_kind(const std::string& text);
ControllerKind parse_controller_kind(const std::string& text);
RateSource parse_rate_source(const std::string& text);

struct ScenarioConfig {
  std::string name = "scenario";
  ScenarioKind kind = ScenarioKind::hold;
  double cruise_airspeed = 35.0;
  double cruise_altitude = 100.0;
  double step = 0.0;        ///< m for altitude steps, m/s for airspeed steps
  double step_time = 0.0;   ///< s
  double duration = 30.0;   ///< s
  double dt = 0.01;         ///< s, dynamics and control period
  std::uint64_t seed = 1;
  int seeds = 1;            ///< repetitions for comparisons and sweeps
  double heading = 0.0;     ///< rad
  ControllerKind controller = ControllerKind::ladrc_tec;
};

struct TurbulenceConfig {
  double onset = 3.0;  ///< s
  DrydenParams dryden;
};

struct ControllerConfig {
  GuidanceGains guidance;
  RateSource rate_source = RateSource::true_derivative;
  double rate_filter_tau = 0.05;
  TecClassicGains tec;
  LadrcTecGains ladrc;
  PitchPidGains pitch;
  LateralGains lateral;
};

struct RunConfig {
  ScenarioConfig scenario;
  TurbulenceConfig turbulence;
  AirframeParams airframe = AirframeParams::aerosonde();
  std::string airframe_source = "builtin:aerosonde";
  ControllerConfig controller;

  /// Throws ConfigError for inconsistent settings.
  void validate() const;
};

/// Defaults for every section, with classical gains scaled to `airframe`.
RunConfig default_run_config(const AirframeParams& airframe = AirframeParams::aerosonde());

/// Parses a run configuration. Relative `params_file` paths resolve against
/// `base_dir`. Unknown sections or keys throw ConfigError naming them.
RunConfig parse_run_config(std::istream& in, const std::filesystem::path& base_dir,
                           const std::string& source = "<stream>");
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace tecsim
