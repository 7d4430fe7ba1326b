#pragma once

#include <Eigen/Core>

namespace tecsim {

struct LesoConfig {
  int order = 1;           ///< plant order n >= 1
  double b0 = 1.0;         ///< nominal input gain
  double omega_o = 10.0;   ///< observer bandwidth, rad/s
  double dt = 0.01;        ///< update period, s
  double divergence_bound = 1e6;

  /// Throws ConfigError unless order >= 1, omega_o > 0, dt > 0,
  /// dt * omega_o < 0.5 and b0 != 0.
  void validate() const;
};

/// Observer gains with all n+1 poles of (A - L C) at -omega_o:
/// L_i = C(n+1, i) * omega_o^i.
Eigen::VectorXd leso_gains(const LesoConfig& config);

/// Linear extended state observer for an n-th order integrator-chain plant
///   y^(n) = f + b0 u
/// with the lumped disturbance f as the extra state.
class Leso {
public:
  explicit Leso(const LesoConfig& config);

  /// One forward-Euler step driven by the input applied over the last period
  /// and the current measurement. Throws SimulationFault on divergence.
  void update(double u, double y);

  /// Sets the plant-state estimates to `y0` (first state) and zeros the rest.
  void reset(double y0 = 0.0);

  const Eigen::VectorXd& estimate() const { return x_hat_; }
  Eigen::VectorXd& estimate() { return x_hat_; }
  double output() const { return x_hat_[0]; }
  double disturbance() const { return x_hat_[x_hat_.size() - 1]; }
  double last_error() const { return error_; }
  const Eigen::VectorXd& gains() const { return gains_; }
  const LesoConfig& config() const { return config_; }

private:
  LesoConfig config_;
  Eigen::VectorXd gains_;
  Eigen::VectorXd x_hat_;
  double error_ = 0.0;
};

/// u = k (r - x_hat) - f_hat / b0. Throws std::invalid_argument for b0 = 0.
double lsefc_first_order(double reference, double x_hat, double f_hat, double k, double b0);

/// u = (kp (r - y_hat) - kd ydot_hat - f_hat) / b0. Throws for b0 = 0.
double lsefc_second_order(double reference, double y_hat, double ydot_hat, double f_hat,
                          double kp, double kd, double b0);

}  // namespace tecsim
