#include "tecsim/comparison.hpp"

#include <algorithm>

#include "tecsim/errors.hpp"

namespace tecsim {

const std::vector<std::string>& comparison_metric_names() {
  static const std::vector<std::string> names = {"settling_time", "overshoot", "std_h",
                                                 "std_Va",        "std_de",    "std_dt",
                                                 "max_dev_h",     "max_dev_Va"};
  return names;
}

namespace {

std::optional<double> metric_value(const Metrics& m, const std::string& name) {
  if (name == "settling_time") return m.settling_time;
  if (name == "overshoot") return m.overshoot;
  if (name == "std_h") return m.std_h;
  if (name == "std_Va") return m.std_Va;
  if (name == "std_de") return m.std_de;
  if (name == "std_dt") return m.std_dt;
  if (name == "max_dev_h") return m.max_dev_h;
  if (name == "max_dev_Va") return m.max_dev_Va;
  return std::nullopt;
}

/// Metrics on which the two controllers are ranked for a scenario kind.
std::vector<std::string> ranked_metrics(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::altitude_step:
    case ScenarioKind::airspeed_step:
      return {"settling_time", "overshoot"};
    case ScenarioKind::turbulence_onset:
      return {"std_h", "std_Va", "std_de", "std_dt"};
    case ScenarioKind::hold:
      return {"max_dev_h", "max_dev_Va"};
  }
  return {};
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json summary_json(const ControllerSummary& s) {
  Json runs = Json::array();
  for (const RunOutcome& r : s.runs) {
    runs.push_back(Json{
        {"seed", r.seed},
        {"metrics", r.metrics ? metrics_to_json(*r.metrics) : Json(nullptr)},
        {"fault", r.fault ? Json(*r.fault) : Json(nullptr)},
        {"fault_time", optional_number(r.fault_time)},
    });
  }
  Json mean = Json::object();
  for (const std::string& name : comparison_metric_names()) {
    mean[name] = optional_number(mean_metric(s, name));
  }
  return Json{{"runs", runs}, {"mean", mean}};
}

}  // namespace

std::optional<double> mean_metric(const ControllerSummary& summary, const std::string& name) {
  double sum = 0.0;
  int count = 0;
  for (const RunOutcome& r : summary.runs) {
    if (!r.metrics) continue;
    const std::optional<double> v = metric_value(*r.metrics, name);
    if (!v) continue;
    sum += *v;
    ++count;
  }
  if (count == 0) return std::nullopt;
  return sum / count;
}

ControllerSummary run_seed_sweep(const RunConfig& config, ControllerKind controller, int seeds) {
  ControllerSummary summary;
  summary.controller = controller;
  for (int i = 0; i < seeds; ++i) {
    RunConfig run = config;
    run.scenario.controller = controller;
    run.scenario.seed = config.scenario.seed + static_cast<std::uint64_t>(i);
    RunOutcome outcome;
    outcome.seed = run.scenario.seed;
    try {
      ScenarioResult result = run_scenario(run);
      outcome.metrics = result.metrics;
      if (!summary.first_run) summary.first_run = std::move(result);
    } catch (const SimulationFault& e) {
      outcome.fault = e.what();
      if (e.has_time()) outcome.fault_time = e.time();
    } catch (const TrimError& e) {
      outcome.fault = e.what();
    } catch (const SingularAllocationError& e) {
      outcome.fault = e.what();
    }
    summary.runs.push_back(std::move(outcome));
  }
  return summary;
}

Comparison run_comparison(const RunConfig& config) {
  Comparison c;
  c.config = config;
  const int seeds =
      config.scenario.kind == ScenarioKind::turbulence_onset ? config.scenario.seeds : 1;
  for (int i = 0; i < seeds; ++i) c.seeds.push_back(config.scenario.seed + static_cast<std::uint64_t>(i));
  c.ladrc = run_seed_sweep(config, ControllerKind::ladrc_tec, seeds);
  c.classic = run_seed_sweep(config, ControllerKind::tec_classic, seeds);
  return c;
}

Json comparison_report(const Comparison& c) {
  const ScenarioKind kind = c.config.scenario.kind;
  Json table = Json::array();
  for (const std::string& name : ranked_metrics(kind)) {
    const auto a = mean_metric(c.ladrc, name);
    const auto b = mean_metric(c.classic, name);
    table.push_back(Json{
        {"metric", name},
        {"ladrc_tec", optional_number(a)},
        {"tec_classic", optional_number(b)},
        {"ladrc_better", a && b && *a < *b},
    });
  }
  return Json{
      {"schema", "tecsim.compare/1"},
      {"name", c.config.scenario.name},
      {"kind", std::string(to_string(kind))},
      {"seeds", c.seeds},
      {"controllers",
       Json{{"ladrc_tec", summary_json(c.ladrc)}, {"tec_classic", summary_json(c.classic)}}},
      {"table", table},
  };
}

Json sweep_report(const RunConfig& config, const ControllerSummary& summary) {
  Json j{
      {"schema", "tecsim.sweep/1"},
      {"name", config.scenario.name},
      {"kind", std::string(to_string(config.scenario.kind))},
      {"controller", std::string(to_string(summary.controller))},
  };
  const Json s = summary_json(summary);
  j["runs"] = s["runs"];
  j["mean"] = s["mean"];
  return j;
}

std::vector<std::string> validate_comparison_report(const Json& r) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
  };
  auto is_number_or_null = [](const Json& v) { return v.is_number() || v.is_null(); };

  require(r.is_object(), "report must be an object");
  if (!r.is_object()) return errors;
  require(r.contains("schema") && r["schema"] == "tecsim.compare/1", "schema must be tecsim.compare/1");
  require(r.contains("name") && r["name"].is_string(), "name must be a string");
  require(r.contains("kind") && r["kind"].is_string(), "kind must be a string");
  if (r.contains("kind") && r["kind"].is_string()) {
    try {
      parse_scenario_kind(r["kind"].get<std::string>());
    } catch (const ConfigError&) {
      errors.push_back("kind is not a known scenario kind");
    }
  }
  require(r.contains("seeds") && r["seeds"].is_array() && !r["seeds"].empty(),
          "seeds must be a non-empty array");
  if (r.contains("seeds") && r["seeds"].is_array()) {
    for (const Json& s : r["seeds"]) require(s.is_number_unsigned(), "seeds must be unsigned integers");
  }

  const bool has_controllers = r.contains("controllers") && r["controllers"].is_object();
  require(has_controllers, "controllers must be an object");
  if (has_controllers) {
    for (const char* name : {"ladrc_tec", "tec_classic"}) {
      if (!r["controllers"].contains(name)) {
        errors.push_back(std::string("controllers.") + name + " missing");
        continue;
      }
      const Json& c = r["controllers"][name];
      require(c.contains("runs") && c["runs"].is_array(), std::string(name) + ".runs must be an array");
      if (c.contains("runs") && c["runs"].is_array()) {
        require(r.contains("seeds") && c["runs"].size() == r["seeds"].size(),
                std::string(name) + ".runs must have one entry per seed");
        for (const Json& run : c["runs"]) {
          require(run.contains("seed") && run["seed"].is_number_unsigned(), "run.seed missing");
          require(run.contains("metrics") && (run["metrics"].is_object() || run["metrics"].is_null()),
                  "run.metrics must be an object or null");
          require(run.contains("fault") && (run["fault"].is_string() || run["fault"].is_null()),
                  "run.fault must be a string or null");
          require(run.contains("fault_time") && is_number_or_null(run["fault_time"]),
                  "run.fault_time must be a number or null");
        }
      }
      require(c.contains("mean") && c["mean"].is_object(), std::string(name) + ".mean must be an object");
      if (c.contains("mean") && c["mean"].is_object()) {
        for (const std::string& m : comparison_metric_names()) {
          require(c["mean"].contains(m) && is_number_or_null(c["mean"][m]),
                  std::string(name) + ".mean." + m + " must be a number or null");
        }
      }
    }
  }

  require(r.contains("table") && r["table"].is_array(), "table must be an array");
  if (r.contains("table") && r["table"].is_array()) {
    for (const Json& row : r["table"]) {
      require(row.contains("metric") && row["metric"].is_string(), "table.metric must be a string");
      require(row.contains("ladrc_tec") && is_number_or_null(row["ladrc_tec"]),
              "table.ladrc_tec must be a number or null");
      require(row.contains("tec_classic") && is_number_or_null(row["tec_classic"]),
              "table.tec_classic must be a number or null");
      require(row.contains("ladrc_better") && row["ladrc_better"].is_boolean(),
              "table.ladrc_better must be a boolean");
    }
  }
  return errors;
}

bool ladrc_strictly_better(const Json& report) {
  const Json& table = report.at("table");
  if (table.empty()) return false;
  return std::all_of(table.begin(), table.end(),
                     [](const Json& row) { return row.at("ladrc_better").get<bool>(); });
}

}  // namespace tecsim
