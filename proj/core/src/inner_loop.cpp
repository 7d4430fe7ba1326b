#include "tecsim/inner_loop.hpp"

#include <algorithm>
#include <cmath>

namespace tecsim {

PitchPid::PitchPid(const PitchPidGains& gains) : gains_(gains) {}

double PitchPid::integral_limit() const {
  return gains_.k_i > 0.0 ? gains_.delta_e_max / gains_.k_i : 0.0;
}

void PitchPid::initialize(double delta_e) {
  integral_ = gains_.k_i > 0.0 ? std::clamp(delta_e / gains_.k_i, -integral_limit(), integral_limit())
                               : 0.0;
  primed_ = false;
  output_ = delta_e;
  have_output_ = true;
}

double PitchPid::update(double theta_desired, double theta, double q, double dt) {
  const double error = theta_desired - theta;
  const double increment = primed_ ? 0.5 * (error + last_error_) * dt : error * dt;
  last_error_ = error;
  primed_ = true;

  const double candidate_integral =
      std::clamp(integral_ + increment, -integral_limit(), integral_limit());
  const double unsat = gains_.k_p * error + gains_.k_i * candidate_integral - gains_.k_d * q;
  const double limit = gains_.delta_e_max;
  const bool pushing_high = unsat > limit && increment > 0.0;
  const bool pushing_low = unsat < -limit && increment < 0.0;
  if (!pushing_high && !pushing_low) {
    integral_ = candidate_integral;
  }

  double out = gains_.k_p * error + gains_.k_i * integral_ - gains_.k_d * q;
  out = std::clamp(out, -limit, limit);
  if (have_output_ && gains_.slew_rate > 0.0) {
    const double step = gains_.slew_rate * dt;
    out = std::clamp(out, output_ - step, output_ + step);
  }
  output_ = out;
  have_output_ = true;
  return out;
}

ThrottleCommand throttle_from_thrust(double thrust_desired, double airspeed,
                                     const AirframeParams& params) {
  const double radicand = (thrust_desired + params.k_T2 * airspeed * airspeed) / params.k_T1;
  if (radicand <= 0.0) {
    return {0.0, radicand < 0.0};
  }
  const double delta_t = std::sqrt(radicand);
  if (delta_t > 1.0) {
    return {1.0, true};
  }
  return {delta_t, false};
}

double wrap_angle(double angle) {
  double a = std::remainder(angle, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

LateralCommand lateral_hold(double phi, double p, double psi, double psi_cmd, double r,
                            const LateralGains& gains) {
  const double phi_cmd =
      std::clamp(gains.k_psi * wrap_angle(psi_cmd - psi), -gains.phi_max, gains.phi_max);
  LateralCommand cmd;
  cmd.delta_a = std::clamp(gains.k_p_phi * (phi_cmd - phi) - gains.k_d_phi * p,
                           -gains.delta_a_max, gains.delta_a_max);
  cmd.delta_r = std::clamp(gains.k_yaw_damper * r, -gains.delta_r_max, gains.delta_r_max);
  return cmd;
}

}  // namespace tecsim
