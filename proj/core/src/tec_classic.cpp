#include "tecsim/tec_classic.hpp"

#include <algorithm>

namespace tecsim {

TecClassicGains TecClassicGains::defaults_for(const AirframeParams& params) {
  const double weight = params.m * params.g;
  TecClassicGains gains;
  gains.k_Ep = 0.5 * weight;
  gains.k_Ei = 0.1 * weight;
  gains.k_Bp = 1.0;
  gains.k_Bi = 0.2;
  return gains;
}

TecClassic::TecClassic(const TecClassicGains& gains, double thrust_trim, double theta_trim)
    : gains_(gains), thrust_trim_(thrust_trim), theta_trim_(theta_trim) {
  reset();
}

void TecClassic::reset() {
  thrust_integral_ = 0.0;
  pitch_integral_ = theta_trim_;
  last_theta_ = theta_trim_;
}

namespace {

// Integrates unless the output is pinned at a limit and the increment pushes
// further into it.
double integrate_with_antiwindup(double integral, double increment, double unsat, double lo,
                                 double hi, double clamp_lo, double clamp_hi, bool anti_windup) {
  const double candidate = std::clamp(integral + increment, clamp_lo, clamp_hi);
  if (!anti_windup) return integral + increment;
  const bool pushing_high = unsat > hi && increment > 0.0;
  const bool pushing_low = unsat < lo && increment < 0.0;
  return (pushing_high || pushing_low) ? integral : candidate;
}

}  // namespace

TecClassicCommand TecClassic::update(double E_dot, double B_dot, double E_dot_desired,
                                     double B_dot_desired, double dt, const ThrustLimits& limits) {
  const double dE = E_dot_desired - E_dot;
  const double dB = B_dot_desired - B_dot;

  const double t_lo = gains_.saturate ? limits.min : -std::numeric_limits<double>::infinity();
  const double t_hi = gains_.saturate ? limits.max : std::numeric_limits<double>::infinity();
  double th_lo = gains_.saturate ? -gains_.theta_max : -std::numeric_limits<double>::infinity();
  double th_hi = gains_.saturate ? gains_.theta_max : std::numeric_limits<double>::infinity();
  if (gains_.theta_rate_limit > 0.0) {
    const double step = gains_.theta_rate_limit * dt;
    th_lo = std::max(th_lo, last_theta_ - step);
    th_hi = std::min(th_hi, last_theta_ + step);
  }

  const double thrust_p = thrust_trim_ - gains_.k_Ep * E_dot;
  const double thrust_inc = gains_.k_Ei * dE * dt;
  const double thrust_unsat = thrust_p + thrust_integral_ + thrust_inc;
  thrust_integral_ = integrate_with_antiwindup(
      thrust_integral_, thrust_inc, thrust_unsat, t_lo, t_hi, -gains_.thrust_integral_limit,
      gains_.thrust_integral_limit, gains_.anti_windup);

  const double pitch_p = -gains_.k_Bp * B_dot;
  const double pitch_inc = gains_.k_Bi * dB * dt;
  const double pitch_unsat = pitch_p + pitch_integral_ + pitch_inc;
  pitch_integral_ = integrate_with_antiwindup(
      pitch_integral_, pitch_inc, pitch_unsat, th_lo, th_hi, theta_trim_ - gains_.pitch_integral_limit,
      theta_trim_ + gains_.pitch_integral_limit, gains_.anti_windup);

  TecClassicCommand cmd;
  const double thrust = thrust_p + thrust_integral_;
  const double theta = pitch_p + pitch_integral_;
  cmd.thrust = std::clamp(thrust, t_lo, t_hi);
  cmd.theta = std::clamp(theta, th_lo, th_hi);
  cmd.thrust_saturated = cmd.thrust != thrust;
  cmd.theta_saturated = cmd.theta != theta;
  last_theta_ = cmd.theta;
  return cmd;
}

}  // namespace tecsim
