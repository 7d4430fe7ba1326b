#include "tecsim/ladrc_tec.hpp"

#include <algorithm>

#include "tecsim/errors.hpp"

namespace tecsim {

namespace {

LesoConfig channel_config(const LadrcTecGains& gains, double b0, double dt) {
  LesoConfig config;
  config.order = 1;
  config.b0 = b0;
  config.omega_o = gains.omega_o;
  config.dt = dt;
  config.divergence_bound = gains.divergence_bound;
  return config;
}

}  // namespace

LadrcTec::LadrcTec(const LadrcTecGains& gains, const AllocationMatrix& allocation,
                   const TrimPoint& trim, double dt)
    : gains_(gains),
      allocation_(allocation),
      trim_(trim),
      dt_(dt),
      energy_observer_(channel_config(gains, gains.b_E, dt)),
      distribution_observer_(channel_config(gains, gains.b_B, dt)) {
  reset();
}

void LadrcTec::reset(double E0, double B0) {
  energy_observer_.reset(E0);
  distribution_observer_.reset(B0);
  applied_u_E_ = 0.0;
  applied_u_B_ = 0.0;
  last_delta_t_ = trim_.delta_t;
  last_theta_ = trim_.theta;
}

LadrcTecCommand LadrcTec::update(const EnergySignals& signals) {
  energy_observer_.update(applied_u_E_, signals.E);
  distribution_observer_.update(applied_u_B_, signals.B);

  const double f_E = gains_.disturbance_feedforward ? energy_observer_.disturbance() : 0.0;
  const double f_B = gains_.disturbance_feedforward ? distribution_observer_.disturbance() : 0.0;

  LadrcTecCommand cmd;
  cmd.u_E = lsefc_first_order(signals.E_desired, energy_observer_.output(), f_E, gains_.k_E,
                              gains_.b_E);
  cmd.u_B = lsefc_first_order(signals.B_desired, distribution_observer_.output(), f_B,
                              gains_.k_B, gains_.b_B);

  const Eigen::Vector2d deviation =
      allocation_.solve(Eigen::Vector2d(gains_.b_E * cmd.u_E, gains_.b_B * cmd.u_B));
  const double delta_t_raw = trim_.delta_t + deviation[0];
  const double theta_raw = trim_.theta + deviation[1];

  double delta_t = delta_t_raw;
  double theta = theta_raw;
  if (gains_.throttle_rate_limit > 0.0) {
    const double step = gains_.throttle_rate_limit * dt_;
    delta_t = std::clamp(delta_t, last_delta_t_ - step, last_delta_t_ + step);
  }
  if (gains_.theta_rate_limit > 0.0) {
    const double step = gains_.theta_rate_limit * dt_;
    theta = std::clamp(theta, last_theta_ - step, last_theta_ + step);
  }
  delta_t = std::clamp(delta_t, 0.0, 1.0);
  theta = std::clamp(theta, -gains_.theta_max, gains_.theta_max);

  cmd.delta_t = delta_t;
  cmd.theta = theta;
  cmd.saturated = delta_t != delta_t_raw || theta != theta_raw;

  const Eigen::Vector2d applied =
      allocation_.apply(Eigen::Vector2d(delta_t - trim_.delta_t, theta - trim_.theta));
  applied_u_E_ = applied[0] / gains_.b_E;
  applied_u_B_ = applied[1] / gains_.b_B;
  last_delta_t_ = delta_t;
  last_theta_ = theta;
  return cmd;
}

}  // namespace tecsim
