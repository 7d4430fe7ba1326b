#pragma once

#include <limits>

#include "tecsim/airframe.hpp"

namespace tecsim {

struct TecClassicGains {
  double k_Ep = 0.0;  ///< N per unit E_dot
  double k_Ei = 0.0;  ///< N/s per unit E_dot error
  double k_Bp = 0.0;  ///< rad per unit B_dot
  double k_Bi = 0.0;  ///< rad/s per unit B_dot error
  double theta_max = 30.0 * kPi / 180.0;
  double thrust_integral_limit = 200.0;  ///< |integral term|, N
  double pitch_integral_limit = 30.0 * kPi / 180.0;  ///< |integral term|, rad
  double theta_rate_limit = 0.0;  ///< rad/s, <= 0 disables
  bool saturate = true;
  bool anti_windup = true;

  /// Defaults scaled by vehicle weight.
  static TecClassicGains defaults_for(const AirframeParams& params);
};

struct ThrustLimits {
  double min = -std::numeric_limits<double>::infinity();
  double max = std::numeric_limits<double>::infinity();
};

struct TecClassicCommand {
  double thrust = 0.0;  ///< N
  double theta = 0.0;   ///< rad
  bool thrust_saturated = false;
  bool theta_saturated = false;
};

/// Classical total-energy control law.
///
///   T^d     = T* - k_Ep E_dot + integral(k_Ei (E_dot^d - E_dot))
///   theta^d =      - k_Bp B_dot + integral(k_Bi (B_dot^d - B_dot))
///
/// The proportional paths act on the measured rates only, which keeps the
/// command path free of zeros; they enter with the damping sign. The pitch
/// integrator starts at the trim pitch so the law is in equilibrium at trim.
class TecClassic {
public:
  TecClassic(const TecClassicGains& gains, double thrust_trim, double theta_trim);

  TecClassicCommand update(double E_dot, double B_dot, double E_dot_desired,
                           double B_dot_desired, double dt, const ThrustLimits& limits = {});

  void reset();

  double thrust_integral() const { return thrust_integral_; }
  double pitch_integral() const { return pitch_integral_; }
  const TecClassicGains& gains() const { return gains_; }

private:
  TecClassicGains gains_;
  double thrust_trim_;
  double theta_trim_;
  double thrust_integral_ = 0.0;
  double pitch_integral_ = 0.0;
  double last_theta_ = 0.0;
};

}  // namespace tecsim
