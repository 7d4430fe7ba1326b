#pragma once

#include <optional>
#include <span>

#include "tecsim/config.hpp"

namespace tecsim {

/// What a series is measured against.
struct MetricsSpec {
  ScenarioKind kind = ScenarioKind::hold;
  double step = 0.0;
  double step_time = 0.0;
  double duration = 0.0;
  double window_start = 0.0;  ///< start of the standard-deviation window
  double nominal_airspeed = 0.0;
  double nominal_altitude = 0.0;
  double nominal_delta_e = 0.0;
  double nominal_delta_t = 0.0;
  double settling_band = 0.02;  ///< fraction of |step|
};

/// Column views of the quantities the metrics need. All spans share a length.
struct MetricSeries {
  std::span<const double> t;
  std::span<const double> h;
  std::span<const double> airspeed;
  std::span<const double> delta_e;
  std::span<const double> delta_t;
};

struct Metrics {
  std::optional<double> settling_time;  ///< s after the step; step scenarios only
  bool settled = true;
  std::optional<double> overshoot;      ///< percent of |step|; step scenarios only
  double std_h = 0.0;      ///< m, RMS about the nominal cruise value
  double std_Va = 0.0;     ///< m/s
  double std_de = 0.0;     ///< deg
  double std_dt = 0.0;     ///< throttle fraction
  double max_dev_h = 0.0;  ///< max |h - h*| over the whole run, m
  double max_dev_Va = 0.0; ///< max |V_a - V_a*| over the whole run, m/s
};

/// Derives step-response and dispersion metrics from a recorded series.
Metrics compute_metrics(const MetricSeries& series, const MetricsSpec& spec);

struct StepResponse {
  double settling_time = 0.0;
  bool settled = false;
  double overshoot = 0.0;
};

/// Settling time (first instant after which |y - target| stays within
/// band * |step|) and overshoot past the target, both measured from `step_time`.
StepResponse step_response(std::span<const double> t, std::span<const double> y, double initial,
                           double step, double step_time, double band);

}  // namespace tecsim
