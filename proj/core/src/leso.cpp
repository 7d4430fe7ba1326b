#include "tecsim/leso.hpp"

#include <cmath>
#include <stdexcept>

#include "tecsim/errors.hpp"

namespace tecsim {

void LesoConfig::validate() const {
  if (order < 1) throw ConfigError("leso: order must be >= 1", "order");
  if (!(omega_o > 0.0)) throw ConfigError("leso: omega_o must be > 0", "omega_o");
  if (!(dt > 0.0)) throw ConfigError("leso: dt must be > 0", "dt");
  if (!(dt * omega_o < 0.5)) {
    throw ConfigError("leso: dt * omega_o must be < 0.5 for a stable discrete observer", "omega_o");
  }
  if (b0 == 0.0) throw ConfigError("leso: b0 must be nonzero", "b0");
  if (!(divergence_bound > 0.0)) throw ConfigError("leso: divergence_bound must be > 0");
}

Eigen::VectorXd leso_gains(const LesoConfig& config) {
  const int n = config.order;
  Eigen::VectorXd L(n + 1);
  double binom = 1.0;
  double power = 1.0;
  for (int i = 1; i <= n + 1; ++i) {
    binom = binom * (n + 2 - i) / i;
    power *= config.omega_o;
    L[i - 1] = binom * power;
  }
  return L;
}

Leso::Leso(const LesoConfig& config) : config_(config) {
  config_.validate();
  gains_ = leso_gains(config_);
  x_hat_ = Eigen::VectorXd::Zero(config_.order + 1);
}

void Leso::update(double u, double y) {
  const int n = config_.order;
  const double dt = config_.dt;
  error_ = y - x_hat_[0];

  Eigen::VectorXd dx(n + 1);
  for (int i = 0; i < n - 1; ++i) {
    dx[i] = x_hat_[i + 1] + gains_[i] * error_;
  }
  dx[n - 1] = x_hat_[n] + config_.b0 * u + gains_[n - 1] * error_;
  dx[n] = gains_[n] * error_;
  x_hat_ += dt * dx;

  if (!x_hat_.allFinite() || x_hat_.norm() > config_.divergence_bound) {
    throw SimulationFault("leso: observer state diverged");
  }
}

void Leso::reset(double y0) {
  x_hat_.setZero();
  x_hat_[0] = y0;
  error_ = 0.0;
}

double lsefc_first_order(double reference, double x_hat, double f_hat, double k, double b0) {
  if (b0 == 0.0) throw std::invalid_argument("lsefc: b0 must be nonzero");
  return k * (reference - x_hat) - f_hat / b0;
}

double lsefc_second_order(double reference, double y_hat, double ydot_hat, double f_hat,
                          double kp, double kd, double b0) {
  if (b0 == 0.0) throw std::invalid_argument("lsefc: b0 must be nonzero");
  const double u0 = kp * (reference - y_hat) - kd * ydot_hat;
  return (u0 - f_hat) / b0;
}

}  // namespace tecsim
