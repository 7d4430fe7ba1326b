#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tecsim/report.hpp"
#include "tecsim/scenario.hpp"

namespace tecsim {

struct RunOutcome {
  std::uint64_t seed = 0;
  std::optional<Metrics> metrics;
  std::optional<std::string> fault;
  std::optional<double> fault_time;
};

struct ControllerSummary {
  ControllerKind controller = ControllerKind::ladrc_tec;
  std::vector<RunOutcome> runs;
  std::optional<ScenarioResult> first_run;  ///< full series of the first seed
};

/// Metric names reported in the comparison table, in order.
const std::vector<std::string>& comparison_metric_names();

/// Mean of `name` over runs that completed. Empty when none did.
std::optional<double> mean_metric(const ControllerSummary& summary, const std::string& name);

/// Runs the scenario over `seeds` consecutive seeds for one controller.
/// Faults are recorded per run instead of aborting the batch.
ControllerSummary run_seed_sweep(const RunConfig& config, ControllerKind controller, int seeds);

struct Comparison {
  RunConfig config;
  std::vector<std::uint64_t> seeds;
  ControllerSummary ladrc;
  ControllerSummary classic;
};

/// Runs the scenario under both controllers with identical seeds. Step and
/// hold scenarios use a single seed; turbulence uses scenario.seeds seeds.
Comparison run_comparison(const RunConfig& config);

/// Contents of `compare_<name>.json` (schema "tecsim.compare/1").
Json comparison_report(const Comparison& comparison);

/// Contents of `sweep_<name>.json` (schema "tecsim.sweep/1").
Json sweep_report(const RunConfig& config, const ControllerSummary& summary);

/// Checks a comparison report against the documented schema. Returns the
/// list of violations; empty means valid.
std::vector<std::string> validate_comparison_report(const Json& report);

/// True when LADRC-TEC is strictly better on every applicable metric.
bool ladrc_strictly_better(const Json& report);

}  // namespace tecsim
