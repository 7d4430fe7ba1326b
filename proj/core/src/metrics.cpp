#include "tecsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace tecsim {

StepResponse step_response(std::span<const double> t, std::span<const double> y, double initial,
                           double step, double step_time, double band) {
  if (t.size() != y.size() || t.empty()) {
    throw std::invalid_argument("step_response: series lengths differ or are empty");
  }
  const double target = initial + step;
  const double tolerance = band * std::abs(step);
  const double direction = step >= 0.0 ? 1.0 : -1.0;

  StepResponse out;
  std::size_t first = 0;
  while (first < t.size() && t[first] < step_time) ++first;
  if (first == t.size()) return out;

  std::optional<std::size_t> last_outside;
  double peak = 0.0;
  for (std::size_t i = first; i < t.size(); ++i) {
    if (std::abs(y[i] - target) > tolerance) last_outside = i;
    peak = std::max(peak, direction * (y[i] - target));
  }
  out.overshoot = step != 0.0 ? 100.0 * peak / std::abs(step) : 0.0;

  if (!last_outside) {
    out.settling_time = 0.0;
    out.settled = true;
  } else if (*last_outside + 1 < t.size()) {
    out.settling_time = t[*last_outside + 1] - step_time;
    out.settled = true;
  } else {
    out.settling_time = t.back() - step_time;
    out.settled = false;
  }
  return out;
}

Metrics compute_metrics(const MetricSeries& s, const MetricsSpec& spec) {
  const std::size_t n = s.t.size();
  if (s.h.size() != n || s.airspeed.size() != n || s.delta_e.size() != n ||
      s.delta_t.size() != n) {
    throw std::invalid_argument("compute_metrics: column lengths differ");
  }

  Metrics m;
  if (spec.kind == ScenarioKind::altitude_step || spec.kind == ScenarioKind::airspeed_step) {
    const bool altitude = spec.kind == ScenarioKind::altitude_step;
    const StepResponse r = step_response(
        s.t, altitude ? s.h : s.airspeed, altitude ? spec.nominal_altitude : spec.nominal_airspeed,
        spec.step, spec.step_time, spec.settling_band);
    m.settling_time = r.settling_time;
    m.settled = r.settled;
    m.overshoot = r.overshoot;
  }

  double sum_h = 0.0, sum_v = 0.0, sum_de = 0.0, sum_dt = 0.0;
  std::size_t count = 0;
  constexpr double kDeg = 180.0 / 3.14159265358979323846;
  for (std::size_t i = 0; i < n; ++i) {
    const double dh = s.h[i] - spec.nominal_altitude;
    const double dv = s.airspeed[i] - spec.nominal_airspeed;
    m.max_dev_h = std::max(m.max_dev_h, std::abs(dh));
    m.max_dev_Va = std::max(m.max_dev_Va, std::abs(dv));
    if (s.t[i] < spec.window_start) continue;
    const double de = (s.delta_e[i] - spec.nominal_delta_e) * kDeg;
    const double dt = s.delta_t[i] - spec.nominal_delta_t;
    sum_h += dh * dh;
    sum_v += dv * dv;
    sum_de += de * de;
    sum_dt += dt * dt;
    ++count;
  }
  if (count > 0) {
    m.std_h = std::sqrt(sum_h / count);
    m.std_Va = std::sqrt(sum_v / count);
    m.std_de = std::sqrt(sum_de / count);
    m.std_dt = std::sqrt(sum_dt / count);
  }
  return m;
}

}  // namespace tecsim
