#include "tecsim/dryden.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "tecsim/errors.hpp"

namespace tecsim {

DrydenGenerator::DrydenGenerator(const DrydenParams& params, double dt, std::uint64_t seed)
    : params_(params), dt_(dt), seed_(seed), rng_(seed) {
  if (!(dt > 0.0)) throw ConfigError("dryden: dt must be > 0", "dt");
  if (!(params.L_u > 0.0)) throw ConfigError("dryden: L_u must be > 0", "L_u");
  if (!(params.L_w > 0.0)) throw ConfigError("dryden: L_w must be > 0", "L_w");
  if (!(params.V_a_ref > 0.0)) throw ConfigError("dryden: V_a_ref must be > 0", "V_a_ref");
  if (!(params.sigma_u >= 0.0)) throw ConfigError("dryden: sigma_u must be >= 0", "sigma_u");
  if (!(params.sigma_w >= 0.0)) throw ConfigError("dryden: sigma_w must be >= 0", "sigma_w");

  const double V = params.V_a_ref;

  const double a_u = V / params.L_u;
  const double b_u = params.sigma_u * std::sqrt(2.0 * V / params.L_u);
  u_phi_ = std::exp(-a_u * dt);
  u_gamma_ = b_u * (1.0 - u_phi_) / a_u;

  const double a_w = V / params.L_w;
  Eigen::Matrix3d augmented = Eigen::Matrix3d::Zero();
  augmented(0, 1) = 1.0;
  augmented(1, 0) = -a_w * a_w;
  augmented(1, 1) = -2.0 * a_w;
  augmented(1, 2) = 1.0;
  const Eigen::Matrix3d zoh = (augmented * dt).exp();
  w_phi_ = zoh.topLeftCorner<2, 2>();
  w_gamma_ = zoh.topRightCorner<2, 1>();
  const double k_w = params.sigma_w * std::sqrt(3.0 * V / params.L_w);
  w_c_ << k_w * a_w / std::sqrt(3.0), k_w;
  w_state_.setZero();

  noise_scale_ = 1.0 / std::sqrt(dt);
}

Gust DrydenGenerator::step() {
  const double n_u = normal_(rng_) * noise_scale_;
  const double n_w = normal_(rng_) * noise_scale_;
  u_state_ = u_phi_ * u_state_ + u_gamma_ * n_u;
  w_state_ = w_phi_ * w_state_ + w_gamma_ * n_w;
  return {u_state_, w_c_ * w_state_};
}

void DrydenGenerator::reset() {
  u_state_ = 0.0;
  w_state_.setZero();
  rng_.seed(seed_);
  normal_.reset();
}

double DrydenGenerator::u_dc_gain() const {
  return params_.sigma_u * std::sqrt(2.0 * params_.L_u / params_.V_a_ref);
}

double DrydenGenerator::u_power_gain(double omega) const {
  const double a = params_.V_a_ref / params_.L_u;
  const double k2 = params_.sigma_u * params_.sigma_u * 2.0 * a;
  return k2 / (omega * omega + a * a);
}

double DrydenGenerator::w_power_gain(double omega) const {
  const double a = params_.V_a_ref / params_.L_w;
  const double k2 = params_.sigma_w * params_.sigma_w * 3.0 * a;
  const double den = omega * omega + a * a;
  return k2 * (omega * omega + a * a / 3.0) / (den * den);
}

DrydenGenerator build_dryden(const DrydenParams& params, double dt, std::uint64_t seed) {
  return DrydenGenerator(params, dt, seed);
}

}  // namespace tecsim
