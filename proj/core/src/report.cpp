#include "tecsim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tecsim/errors.hpp"
#include "tecsim/keyvalue.hpp"

namespace tecsim {

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& series) {
  const auto& columns = series_columns();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i].name;
  }
  out << '\n';
  char buf[40];
  for (const SeriesRow& row : series) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.9g", row.*(columns[i].field));
      if (i) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

std::vector<SeriesRow> read_series_csv(std::istream& in) {
  const auto& columns = series_columns();
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("series csv: empty input");
  {
    std::istringstream header(line);
    std::string name;
    std::size_t i = 0;
    while (std::getline(header, name, ',')) {
      if (i >= columns.size() || name != columns[i].name) {
        throw ConfigError("series csv: unexpected column '" + name + "'", name);
      }
      ++i;
    }
    if (i != columns.size()) throw ConfigError("series csv: missing columns");
  }

  std::vector<SeriesRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    SeriesRow row;
    std::size_t i = 0;
    while (std::getline(fields, cell, ',')) {
      if (i >= columns.size()) throw ConfigError("series csv: too many fields");
      row.*(columns[i].field) = parse_double(std::string(columns[i].name), cell);
      ++i;
    }
    if (i != columns.size()) throw ConfigError("series csv: too few fields");
    rows.push_back(row);
  }
  return rows;
}

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json metrics_to_json(const Metrics& m) {
  return Json{
      {"settling_time", optional_number(m.settling_time)},
      {"settled", m.settled},
      {"overshoot", optional_number(m.overshoot)},
      {"std_h", m.std_h},
      {"std_Va", m.std_Va},
      {"std_de", m.std_de},
      {"std_dt", m.std_dt},
      {"max_dev_h", m.max_dev_h},
      {"max_dev_Va", m.max_dev_Va},
  };
}

Json metrics_spec_to_json(const MetricsSpec& s) {
  return Json{
      {"kind", std::string(to_string(s.kind))},
      {"step", s.step},
      {"step_time", s.step_time},
      {"duration", s.duration},
      {"window_start", s.window_start},
      {"nominal_airspeed", s.nominal_airspeed},
      {"nominal_altitude", s.nominal_altitude},
      {"nominal_delta_e", s.nominal_delta_e},
      {"nominal_delta_t", s.nominal_delta_t},
      {"settling_band", s.settling_band},
  };
}

MetricsSpec metrics_spec_from_json(const Json& j) {
  try {
    MetricsSpec s;
    s.kind = parse_scenario_kind(j.at("kind").get<std::string>());
    s.step = j.at("step").get<double>();
    s.step_time = j.at("step_time").get<double>();
    s.duration = j.at("duration").get<double>();
    s.window_start = j.at("window_start").get<double>();
    s.nominal_airspeed = j.at("nominal_airspeed").get<double>();
    s.nominal_altitude = j.at("nominal_altitude").get<double>();
    s.nominal_delta_e = j.at("nominal_delta_e").get<double>();
    s.nominal_delta_t = j.at("nominal_delta_t").get<double>();
    s.settling_band = j.at("settling_band").get<double>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("metrics spec: ") + e.what());
  }
}

Json trim_to_json(const TrimPoint& t) {
  return Json{
      {"airspeed", t.airspeed}, {"altitude", t.altitude}, {"alpha", t.alpha},
      {"theta", t.theta},       {"delta_e", t.delta_e},   {"delta_t", t.delta_t},
      {"thrust", t.thrust},     {"residual", t.residual}, {"iterations", t.iterations},
  };
}

Json allocation_to_json(const AllocationMatrix& a) {
  auto matrix = [](const Eigen::Matrix2d& m) {
    return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
  };
  return Json{
      {"A", matrix(a.A)},
      {"A_inv", matrix(a.inverse)},
      {"condition", a.condition},
      {"a1", a.a1},
      {"a2", a.a2},
      {"a3", a.a3},
  };
}

Json run_report(const ScenarioResult& r) {
  return Json{
      {"name", r.scenario.name},
      {"kind", std::string(to_string(r.scenario.kind))},
      {"controller", std::string(to_string(r.controller))},
      {"seed", r.scenario.seed},
      {"samples", r.series.size()},
      {"metrics", metrics_to_json(r.metrics)},
      {"metrics_spec", metrics_spec_to_json(r.metrics_spec)},
      {"trim", trim_to_json(r.trim)},
      {"allocation", allocation_to_json(r.allocation)},
  };
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_run_outputs(const std::filesystem::path& dir, const std::string& stem,
                       const ScenarioResult& result) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / (stem + "_series.csv"));
    if (!csv) throw std::runtime_error("cannot write series csv in " + dir.string());
    write_series_csv(csv, result.series);
  }
  write_json_file(dir / (stem + "_metrics.json"), run_report(result));
}

}  // namespace tecsim
