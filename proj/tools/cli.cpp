#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "tecsim/comparison.hpp"
#include "tecsim/config.hpp"
#include "tecsim/errors.hpp"
#include "tecsim/report.hpp"
#include "tecsim/scenario.hpp"

namespace tecsim::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kHoldAltitudeBand = 0.5;  // m
constexpr double kHoldAirspeedBand = 0.2;  // m/s

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::string controller;
  bool check = false;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_out, bool with_controller) {
  cmd->add_option("-c,--config", o.config_path, "Run configuration file")->check(CLI::ExistingFile);
  if (with_out) cmd->add_option("-o,--out", o.out_dir, "Output directory");
  cmd->add_option("-s,--seed", o.seed, "Override the scenario seed");
  if (with_controller) {
    cmd->add_option("--controller", o.controller, "Override the controller")
        ->check(CLI::IsMember({"tec_classic", "ladrc_tec"}));
  }
  cmd->add_flag("--check", o.check, "Exit with status 4 when an acceptance check fails");
}

RunConfig load_config(const CommonOptions& o) {
  RunConfig config = o.config_path.empty() ? default_run_config() : load_run_config(o.config_path);
  if (o.seed) config.scenario.seed = *o.seed;
  if (!o.controller.empty()) config.scenario.controller = parse_controller_kind(o.controller);
  config.validate();
  return config;
}

void log_event(std::ostream& err, const Json& j) { err << j.dump() << '\n'; }

void log_allocation(std::ostream& err, const ScenarioResult& r) {
  log_event(err, Json{{"event", "allocation"},
                      {"scenario", r.scenario.name},
                      {"A", allocation_to_json(r.allocation)["A"]},
                      {"A_inv", allocation_to_json(r.allocation)["A_inv"]},
                      {"condition", r.allocation.condition}});
}

double theta_limit(const RunConfig& config, ControllerKind controller) {
  return controller == ControllerKind::tec_classic ? config.controller.tec.theta_max
                                                   : config.controller.ladrc.theta_max;
}

/// Saturation and settling checks on one stored run. Returns violations.
std::vector<std::string> check_run(const RunConfig& config, const ScenarioResult& r) {
  std::vector<std::string> violations;
  const double de_max = config.controller.pitch.delta_e_max;
  const double th_max = theta_limit(config, r.controller);
  constexpr double kRel = 1e-8;
  for (const SeriesRow& row : r.series) {
    if (row.delta_t < 0.0 || row.delta_t > 1.0) {
      violations.push_back("delta_t out of [0, 1] at t=" + std::to_string(row.t));
      break;
    }
    if (std::abs(row.delta_e) > de_max * (1.0 + kRel)) {
      violations.push_back("delta_e beyond its limit at t=" + std::to_string(row.t));
      break;
    }
    if (std::abs(row.theta_cmd) > th_max * (1.0 + kRel)) {
      violations.push_back("theta command beyond its limit at t=" + std::to_string(row.t));
      break;
    }
  }
  if (r.metrics.settling_time && !r.metrics.settled) {
    violations.push_back(std::string(to_string(r.controller)) + " did not settle");
  }
  return violations;
}

int report_violations(std::ostream& err, const std::vector<std::string>& violations) {
  if (violations.empty()) return kSuccess;
  log_event(err, Json{{"error", "check_failed"}, {"violations", violations}});
  return kCheckFailed;
}

int cmd_trim(const CommonOptions& o, double airspeed, double altitude, std::ostream& out) {
  RunConfig config = load_config(o);
  const double va = airspeed > 0.0 ? airspeed : config.scenario.cruise_airspeed;
  const double h = std::isnan(altitude) ? config.scenario.cruise_altitude : altitude;
  const TrimPoint trim = trim_level_flight(va, h, config.airframe);
  const AllocationMatrix allocation = compute_allocation(trim, config.airframe);
  out << Json{{"airframe", config.airframe_source},
              {"trim", trim_to_json(trim)},
              {"allocation", allocation_to_json(allocation)}}
             .dump(2)
      << '\n';
  return kSuccess;
}

int cmd_run(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const RunConfig config = load_config(o);
  const ScenarioResult result = run_scenario(config);
  log_allocation(err, result);
  const std::string stem = config.scenario.name;
  write_run_outputs(o.out_dir, stem, result);
  out << metrics_to_json(result.metrics).dump() << '\n';
  if (!o.check) return kSuccess;
  return report_violations(err, check_run(config, result));
}

int cmd_compare(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  const RunConfig config = load_config(o);
  const Comparison c = run_comparison(config);
  fs::create_directories(o.out_dir);

  bool faulted = false;
  std::vector<std::string> violations;
  for (const ControllerSummary* s : {&c.ladrc, &c.classic}) {
    for (const RunOutcome& run : s->runs) {
      if (run.fault) {
        faulted = true;
        log_event(err, Json{{"error", "simulation_fault"},
                            {"controller", to_string(s->controller)},
                            {"seed", run.seed},
                            {"message", *run.fault},
                            {"time", run.fault_time ? Json(*run.fault_time) : Json(nullptr)}});
      }
    }
    if (!s->first_run) continue;
    const ScenarioResult& r = *s->first_run;
    if (s == &c.ladrc) log_allocation(err, r);
    write_run_outputs(o.out_dir, config.scenario.name + "_" + std::string(to_string(s->controller)), r);
    const auto v = check_run(config, r);
    violations.insert(violations.end(), v.begin(), v.end());
  }

  const Json report = comparison_report(c);
  write_json_file(fs::path(o.out_dir) / ("compare_" + config.scenario.name + ".json"), report);
  out << report["table"].dump() << '\n';
  if (faulted) return kSimulationFault;
  if (!o.check) return kSuccess;

  for (const std::string& e : validate_comparison_report(report)) violations.push_back("schema: " + e);
  if (config.scenario.kind == ScenarioKind::hold) {
    for (const ControllerSummary* s : {&c.ladrc, &c.classic}) {
      if (!s->first_run) continue;
      const Metrics& m = s->first_run->metrics;
      if (m.max_dev_h >= kHoldAltitudeBand || m.max_dev_Va >= kHoldAirspeedBand) {
        violations.push_back(std::string(to_string(s->controller)) + " left the trim-hold band");
      }
    }
  } else if (!ladrc_strictly_better(report)) {
    violations.push_back("ladrc_tec is not strictly better on every metric");
  }
  return report_violations(err, violations);
}

int cmd_sweep(const CommonOptions& o, std::optional<int> seeds, std::ostream& out,
              std::ostream& err) {
  const RunConfig config = load_config(o);
  const int n = seeds.value_or(config.scenario.seeds);
  if (n < 1) throw ConfigError("--seeds must be at least 1", "seeds");
  const ControllerSummary summary = run_seed_sweep(config, config.scenario.controller, n);
  fs::create_directories(o.out_dir);
  const Json report = sweep_report(config, summary);
  write_json_file(fs::path(o.out_dir) / ("sweep_" + config.scenario.name + ".json"), report);
  out << report["mean"].dump() << '\n';

  bool faulted = false;
  for (const RunOutcome& run : summary.runs) {
    if (!run.fault) continue;
    faulted = true;
    log_event(err, Json{{"error", "simulation_fault"},
                        {"seed", run.seed},
                        {"message", *run.fault},
                        {"time", run.fault_time ? Json(*run.fault_time) : Json(nullptr)}});
  }
  return faulted ? kSimulationFault : kSuccess;
}

int cmd_metrics(const std::string& series_path, const std::string& report_path, bool check,
                std::ostream& out, std::ostream& err) {
  std::ifstream in(series_path);
  if (!in) throw ConfigError("cannot open " + series_path);
  const std::vector<SeriesRow> series = read_series_csv(in);
  const Json stored = read_json_file(report_path);
  if (!stored.contains("metrics_spec")) {
    throw ConfigError(report_path + ": missing metrics_spec", "metrics_spec");
  }
  const MetricsSpec spec = metrics_spec_from_json(stored["metrics_spec"]);
  const SeriesColumns cols = metric_columns(series);
  const Json recomputed = metrics_to_json(compute_metrics(cols.view(), spec));
  out << recomputed.dump() << '\n';
  if (!check) return kSuccess;
  if (stored.contains("metrics") && stored["metrics"] == recomputed) return kSuccess;
  return report_violations(err, {"recomputed metrics differ from " + report_path});
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longitudinal energy-control simulator for a small fixed-wing aircraft", "tecsim"};
  app.require_subcommand(1);

  CommonOptions trim_opts, run_opts, compare_opts, sweep_opts;
  double trim_airspeed = 0.0;
  double trim_altitude = std::nan("");
  std::optional<int> sweep_seeds;
  std::string metrics_series, metrics_report;
  bool metrics_check = false;

  auto* trim = app.add_subcommand("trim", "Print the level-flight trim point and allocation matrix");
  add_common(trim, trim_opts, false, false);
  trim->add_option("--airspeed", trim_airspeed, "Trim airspeed in m/s (default: scenario cruise)");
  trim->add_option("--altitude", trim_altitude, "Trim altitude in m (default: scenario cruise)");

  auto* run = app.add_subcommand("run", "Run one scenario");
  add_common(run, run_opts, true, true);

  auto* compare = app.add_subcommand("compare", "Run a scenario under both controllers");
  add_common(compare, compare_opts, true, false);

  auto* sweep = app.add_subcommand("sweep", "Run one controller over consecutive seeds");
  add_common(sweep, sweep_opts, true, true);
  sweep->add_option("-n,--seeds", sweep_seeds, "Number of seeds (default: scenario seeds)");

  auto* metrics = app.add_subcommand("metrics", "Recompute metrics from a stored series");
  metrics->add_option("series", metrics_series, "Series CSV")->required()->check(CLI::ExistingFile);
  metrics->add_option("report", metrics_report, "Metrics JSON written with the series")
      ->required()
      ->check(CLI::ExistingFile);
  metrics->add_flag("--check", metrics_check, "Exit with status 4 when the metrics differ");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*trim) return cmd_trim(trim_opts, trim_airspeed, trim_altitude, out);
    if (*run) return cmd_run(run_opts, out, err);
    if (*compare) return cmd_compare(compare_opts, out, err);
    if (*sweep) return cmd_sweep(sweep_opts, sweep_seeds, out, err);
    if (*metrics) return cmd_metrics(metrics_series, metrics_report, metrics_check, out, err);
  } catch (const ConfigError& e) {
    Json j{{"error", "config_error"}, {"message", e.what()}};
    if (!e.key().empty()) j["key"] = e.key();
    log_event(err, j);
    return kConfigError;
  } catch (const SimulationFault& e) {
    log_event(err, Json{{"error", "simulation_fault"},
                        {"message", e.what()},
                        {"time", e.has_time() ? Json(e.time()) : Json(nullptr)}});
    return kSimulationFault;
  } catch (const TrimError& e) {
    log_event(err, Json{{"error", "simulation_fault"}, {"message", e.what()}, {"time", nullptr}});
    return kSimulationFault;
  } catch (const SingularAllocationError& e) {
    log_event(err, Json{{"error", "simulation_fault"}, {"message", e.what()}, {"time", nullptr}});
    return kSimulationFault;
  } catch (const std::exception& e) {
    log_event(err, Json{{"error", "internal_error"}, {"message", e.what()}});
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace tecsim::cli
