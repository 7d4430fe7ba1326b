#include "tecsim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "tecsim/dryden.hpp"
#include "tecsim/energy.hpp"
#include "tecsim/errors.hpp"
#include "tecsim/inner_loop.hpp"
#include "tecsim/ladrc_tec.hpp"
#include "tecsim/tec_classic.hpp"

namespace tecsim {

const std::vector<SeriesColumn>& series_columns() {
  static const std::vector<SeriesColumn> columns = {
      {"t", &SeriesRow::t},
      {"north", &SeriesRow::north},
      {"east", &SeriesRow::east},
      {"h", &SeriesRow::h},
      {"u", &SeriesRow::u},
      {"v", &SeriesRow::v},
      {"w", &SeriesRow::w},
      {"phi", &SeriesRow::phi},
      {"theta", &SeriesRow::theta},
      {"psi", &SeriesRow::psi},
      {"p", &SeriesRow::p},
      {"q", &SeriesRow::q},
      {"r", &SeriesRow::r},
      {"V_a", &SeriesRow::airspeed},
      {"alpha", &SeriesRow::alpha},
      {"h_cmd", &SeriesRow::h_cmd},
      {"V_a_cmd", &SeriesRow::airspeed_cmd},
      {"theta_cmd", &SeriesRow::theta_cmd},
      {"delta_e", &SeriesRow::delta_e},
      {"delta_a", &SeriesRow::delta_a},
      {"delta_r", &SeriesRow::delta_r},
      {"delta_t", &SeriesRow::delta_t},
      {"thrust", &SeriesRow::thrust},
      {"drag", &SeriesRow::drag},
      {"E_T", &SeriesRow::E_T},
      {"E_dot", &SeriesRow::E_dot},
      {"B_dot", &SeriesRow::B_dot},
      {"E_dot_d", &SeriesRow::E_dot_d},
      {"B_dot_d", &SeriesRow::B_dot_d},
      {"E", &SeriesRow::E},
      {"B", &SeriesRow::B},
      {"E_d", &SeriesRow::E_d},
      {"B_d", &SeriesRow::B_d},
      {"E_hat", &SeriesRow::E_hat},
      {"f_E_hat", &SeriesRow::f_E_hat},
      {"B_hat", &SeriesRow::B_hat},
      {"f_B_hat", &SeriesRow::f_B_hat},
      {"u_gust", &SeriesRow::u_gust},
      {"w_gust", &SeriesRow::w_gust},
  };
  return columns;
}

double round_to_csv_precision(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return std::strtod(buf, nullptr);
}

MetricsSpec metrics_spec_for(const RunConfig& config, const TrimPoint& trim) {
  const ScenarioConfig& s = config.scenario;
  MetricsSpec spec;
  spec.kind = s.kind;
  spec.step = (s.kind == ScenarioKind::altitude_step || s.kind == ScenarioKind::airspeed_step) ? s.step : 0.0;
  spec.step_time = s.step_time;
  spec.duration = s.duration;
  spec.window_start = s.kind == ScenarioKind::turbulence_onset ? config.turbulence.onset : s.step_time;
  spec.nominal_airspeed = round_to_csv_precision(trim.airspeed);
  spec.nominal_altitude = round_to_csv_precision(trim.altitude);
  spec.nominal_delta_e = round_to_csv_precision(trim.delta_e);
  spec.nominal_delta_t = round_to_csv_precision(trim.delta_t);
  return spec;
}

SeriesColumns metric_columns(const std::vector<SeriesRow>& series) {
  SeriesColumns c;
  for (const SeriesRow& row : series) {
    c.t.push_back(row.t);
    c.h.push_back(row.h);
    c.airspeed.push_back(row.airspeed);
    c.delta_e.push_back(row.delta_e);
    c.delta_t.push_back(row.delta_t);
  }
  return c;
}

namespace {

/// Produces (delta_t, theta) commands for whichever outer loop is selected.
class OuterLoop {
public:
  OuterLoop(const RunConfig& config, const TrimPoint& trim, const AllocationMatrix& allocation)
      : kind_(config.scenario.controller), params_(config.airframe) {
    if (kind_ == ControllerKind::tec_classic) {
      tec_.emplace(config.controller.tec, trim.thrust, trim.theta);
    } else {
      ladrc_.emplace(config.controller.ladrc, allocation, trim, config.scenario.dt);
    }
  }

  struct Output {
    double delta_t = 0.0;
    double theta = 0.0;
  };

  Output update(const EnergySignals& signals, double airspeed, double dt) {
    if (tec_) {
      const ThrustLimits limits{-params_.k_T2 * airspeed * airspeed,
                                params_.k_T1 - params_.k_T2 * airspeed * airspeed};
      const TecClassicCommand cmd =
          tec_->update(signals.E_dot, signals.B_dot, signals.E_dot_desired,
                       signals.B_dot_desired, dt, limits);
      return {throttle_from_thrust(cmd.thrust, airspeed, params_).delta_t, cmd.theta};
    }
    const LadrcTecCommand cmd = ladrc_->update(signals);
    return {cmd.delta_t, cmd.theta};
  }

  const LadrcTec* ladrc() const { return ladrc_ ? &*ladrc_ : nullptr; }

private:
  ControllerKind kind_;
  const AirframeParams& params_;
  std::optional<TecClassic> tec_;
  std::optional<LadrcTec> ladrc_;
};

}  // namespace

ScenarioResult run_scenario(const RunConfig& config) {
  config.validate();
  const ScenarioConfig& sc = config.scenario;
  const AirframeParams& params = config.airframe;
  const ControllerConfig& ctl = config.controller;
  const double dt = sc.dt;
  const auto steps = static_cast<long>(std::llround(sc.duration / dt));

  ScenarioResult result;
  result.scenario = sc;
  result.controller = sc.controller;
  result.trim = trim_level_flight(sc.cruise_airspeed, sc.cruise_altitude, params);
  result.allocation = compute_allocation(result.trim, params);
  result.metrics_spec = metrics_spec_for(config, result.trim);
  const TrimPoint& trim = result.trim;

  OuterLoop outer(config, trim, result.allocation);
  PitchPid pitch(ctl.pitch);
  pitch.initialize(trim.delta_e);
  RateEstimator airspeed_rate_est(ctl.rate_filter_tau);
  RateEstimator climb_rate_est(ctl.rate_filter_tau);

  const bool turbulent = sc.kind == ScenarioKind::turbulence_onset;
  std::optional<DrydenGenerator> dryden;
  if (turbulent) dryden.emplace(config.turbulence.dryden, dt, sc.seed);

  AircraftState state = trim.state();
  state.psi = sc.heading;
  ControlInputs inputs = trim.inputs();
  EnergySignals signals;
  bool first = true;
  result.series.reserve(static_cast<std::size_t>(steps) + 1);

  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    try {
      Wind wind;
      if (dryden && t >= config.turbulence.onset) {
        const Gust gust = dryden->step();
        wind.x = gust.u;
        wind.z = gust.w;
      }

      const bool stepped = t >= sc.step_time;
      double h_cmd = sc.cruise_altitude;
      double airspeed_cmd = sc.cruise_airspeed;
      if (stepped && sc.kind == ScenarioKind::altitude_step) h_cmd += sc.step;
      if (stepped && sc.kind == ScenarioKind::airspeed_step) airspeed_cmd += sc.step;

      // Measurements: body accelerations at the current state under the
      // inputs that are being applied.
      const AircraftState deriv = state_derivative(state, inputs, wind, params);
      const AeroForces aero = aero_forces_moments(state, wind, inputs, params);
      const double Va = aero.airspeed;
      double Va_dot = airspeed_rate(state, deriv, wind);
      double h_dot = deriv.h;
      if (ctl.rate_source == RateSource::difference) {
        Va_dot = airspeed_rate_est.update(Va, dt);
        h_dot = climb_rate_est.update(state.h, dt);
      }

      EnergySignals next;
      const EnergyRates rates = energy_rates(Va_dot, h_dot, Va, params.g);
      next.E_T = total_energy(params.m, Va, state.h, params.g);
      next.E_dot = rates.E_dot;
      next.B_dot = rates.B_dot;
      const DesiredRates desired =
          desired_rates(airspeed_cmd, h_cmd, Va, state.h, ctl.guidance, params.g);
      next.E_dot_desired = desired.E_dot;
      next.B_dot_desired = desired.B_dot;
      signals = first ? next : integrate_energy_refs(signals, next, dt);
      first = false;

      const OuterLoop::Output outer_cmd = outer.update(signals, Va, dt);
      const LateralCommand lateral =
          lateral_hold(state.phi, state.p, state.psi, sc.heading, state.r, ctl.lateral);

      inputs.delta_t = outer_cmd.delta_t;
      inputs.delta_e = pitch.update(outer_cmd.theta, state.theta, state.q, dt);
      inputs.delta_a = lateral.delta_a;
      inputs.delta_r = lateral.delta_r;

      SeriesRow row;
      row.t = t;
      row.north = state.north;
      row.east = state.east;
      row.h = state.h;
      row.u = state.u;
      row.v = state.v;
      row.w = state.w;
      row.phi = state.phi;
      row.theta = state.theta;
      row.psi = state.psi;
      row.p = state.p;
      row.q = state.q;
      row.r = state.r;
      row.airspeed = Va;
      row.alpha = aero.alpha;
      row.h_cmd = h_cmd;
      row.airspeed_cmd = airspeed_cmd;
      row.theta_cmd = outer_cmd.theta;
      row.delta_e = inputs.delta_e;
      row.delta_a = inputs.delta_a;
      row.delta_r = inputs.delta_r;
      row.delta_t = inputs.delta_t;
      row.thrust = propeller_thrust(inputs.delta_t, Va, params);
      row.drag = aero.drag;
      row.E_T = signals.E_T;
      row.E_dot = signals.E_dot;
      row.B_dot = signals.B_dot;
      row.E_dot_d = signals.E_dot_desired;
      row.B_dot_d = signals.B_dot_desired;
      row.E = signals.E;
      row.B = signals.B;
      row.E_d = signals.E_desired;
      row.B_d = signals.B_desired;
      if (const LadrcTec* ladrc = outer.ladrc()) {
        row.E_hat = ladrc->energy_observer().output();
        row.f_E_hat = ladrc->energy_observer().disturbance();
        row.B_hat = ladrc->distribution_observer().output();
        row.f_B_hat = ladrc->distribution_observer().disturbance();
      }
      row.u_gust = wind.x;
      row.w_gust = wind.z;
      for (const SeriesColumn& col : series_columns()) {
        row.*(col.field) = round_to_csv_precision(row.*(col.field));
      }
      result.series.push_back(row);

      if (k < steps) {
        state = step_rk4(state, inputs, wind, dt, params);
      }
    } catch (const SimulationFault& fault) {
      throw SimulationFault(fault.what(), t);
    } catch (const LowAirspeedError& e) {
      throw SimulationFault(e.what(), t);
    }
  }

  const SeriesColumns cols = metric_columns(result.series);
  result.metrics = compute_metrics(cols.view(), result.metrics_spec);
  return result;
}

}  // namespace tecsim
