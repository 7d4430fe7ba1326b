#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "tecsim/allocation.hpp"
#include "tecsim/config.hpp"
#include "tecsim/metrics.hpp"

namespace tecsim {

/// One control step of a closed-loop run. Every value is stored rounded to
/// the 9 significant digits written to CSV, so metrics computed here and from
/// a stored CSV agree exactly.
struct SeriesRow {
  double t = 0.0;
  double north = 0.0, east = 0.0, h = 0.0;
  double u = 0.0, v = 0.0, w = 0.0;
  double phi = 0.0, theta = 0.0, psi = 0.0;
  double p = 0.0, q = 0.0, r = 0.0;
  double airspeed = 0.0;
  double alpha = 0.0;
  double h_cmd = 0.0;
  double airspeed_cmd = 0.0;
  double theta_cmd = 0.0;
  double delta_e = 0.0;
  double delta_a = 0.0;
  double delta_r = 0.0;
  double delta_t = 0.0;
  double thrust = 0.0;
  double drag = 0.0;
  double E_T = 0.0;
  double E_dot = 0.0;
  double B_dot = 0.0;
  double E_dot_d = 0.0;
  double B_dot_d = 0.0;
  double E = 0.0;
  double B = 0.0;
  double E_d = 0.0;
  double B_d = 0.0;
  double E_hat = 0.0;
  double f_E_hat = 0.0;
  double B_hat = 0.0;
  double f_B_hat = 0.0;
  double u_gust = 0.0;
  double w_gust = 0.0;
};

struct SeriesColumn {
  std::string_view name;
  double SeriesRow::*field;
};

/// Fixed CSV column order.
const std::vector<SeriesColumn>& series_columns();

struct ScenarioResult {
  ScenarioConfig scenario;
  ControllerKind controller = ControllerKind::ladrc_tec;
  TrimPoint trim;
  AllocationMatrix allocation;
  MetricsSpec metrics_spec;
  Metrics metrics;
  std::vector<SeriesRow> series;
};

MetricsSpec metrics_spec_for(const RunConfig& config, const TrimPoint& trim);

/// Column views over a recorded series, for compute_metrics.
struct SeriesColumns {
  std::vector<double> t, h, airspeed, delta_e, delta_t;
  MetricSeries view() const { return {t, h, airspeed, delta_e, delta_t}; }
};
SeriesColumns metric_columns(const std::vector<SeriesRow>& series);

/// Trims at the cruise point, initializes the selected controller at trim and
/// runs the closed loop for the configured duration. Deterministic in
/// (config, seed). Throws TrimError, SimulationFault (with the failing time)
/// or SingularAllocationError.
ScenarioResult run_scenario(const RunConfig& config);

/// Rounds to the 9 significant digits used in CSV output.
double round_to_csv_precision(double value);

}  // namespace tecsim
