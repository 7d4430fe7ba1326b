#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace tecsim {

struct DrydenParams {
  double sigma_u = 1.06;  ///< m/s
  double sigma_w = 0.7;   ///< m/s
  double L_u = 200.0;     ///< m
  double L_w = 50.0;      ///< m
  double V_a_ref = 35.0;  ///< m/s, airspeed the filters are formed at
};

struct Gust {
  double u = 0.0;  ///< body x, m/s
  double w = 0.0;  ///< body z, m/s
};

/// Longitudinal Dryden gust generator.
///
/// G_u(s) = sigma_u sqrt(2V/L_u) / (s + V/L_u)
/// G_w(s) = sigma_w sqrt(3V/L_w) (s + V/(sqrt(3) L_w)) / (s + V/L_w)^2
///
/// Both filters are discretized by zero-order hold at `dt` and driven by
/// independent Gaussian samples of variance 1/dt, which emulates continuous
/// white noise of unit two-sided spectral density. Output variances therefore
/// approach sigma_u^2 and sigma_w^2.
class DrydenGenerator {
public:
  DrydenGenerator(const DrydenParams& params, double dt, std::uint64_t seed);

  /// Advances both filters by one step and returns the new gust sample.
  Gust step();

  /// Restores the zero filter state and rewinds the noise stream to the seed.
  void reset();

  const DrydenParams& params() const { return params_; }
  double dt() const { return dt_; }
  std::uint64_t seed() const { return seed_; }

  /// Continuous-time DC gain of G_u, sigma_u sqrt(2 L_u / V).
  double u_dc_gain() const;
  /// |G_u(j omega)|^2 and |G_w(j omega)|^2.
  double u_power_gain(double omega) const;
  double w_power_gain(double omega) const;

private:
  DrydenParams params_;
  double dt_;
  std::uint64_t seed_;

  // u channel: x' = -a x + b n, y = x
  double u_phi_ = 0.0;
  double u_gamma_ = 0.0;
  double u_state_ = 0.0;

  // w channel: controllable canonical form, y = c . x
  Eigen::Matrix2d w_phi_;
  Eigen::Vector2d w_gamma_;
  Eigen::RowVector2d w_c_;
  Eigen::Vector2d w_state_;

  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
  double noise_scale_ = 0.0;
};

DrydenGenerator build_dryden(const DrydenParams& params, double dt, std::uint64_t seed);

}  // namespace tecsim
