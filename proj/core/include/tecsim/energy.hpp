#pragma once

#include "tecsim/airframe.hpp"

namespace tecsim {

/// Airspeed floor guarding the 1/V_a terms of the energy rates.
inline constexpr double kMinEnergyAirspeed = 1.0;

/// Measured and commanded energy quantities of one control step. Rates are
/// specific (dimensionless); E and B are their time integrals (s).
struct EnergySignals {
  double E_T = 0.0;
  double E = 0.0;
  double E_dot = 0.0;
  double B = 0.0;
  double B_dot = 0.0;
  double E_dot_desired = 0.0;
  double B_dot_desired = 0.0;
  double E_desired = 0.0;
  double B_desired = 0.0;
};

struct EnergyRates {
  double E_dot = 0.0;
  double B_dot = 0.0;
};

/// 1/2 m V^2 + m g h, in joules.
double total_energy(double mass, double airspeed, double altitude, double g = kStandardGravity);

/// E_dot = V_dot/g + h_dot/V_a, B_dot = -V_dot/g + h_dot/V_a.
/// Throws LowAirspeedError when V_a <= kMinEnergyAirspeed.
EnergyRates energy_rates(double airspeed_rate, double climb_rate, double airspeed,
                         double g = kStandardGravity);

struct GuidanceGains {
  double k_V = 0.5;           ///< 1/s
  double k_h = 0.3;           ///< 1/s
  double max_climb_rate = 5.0;    ///< |h_dot^d| limit, m/s
  double max_acceleration = 3.0;  ///< |V_dot^d| limit, m/s^2
};

struct DesiredRates {
  double airspeed_rate = 0.0;
  double climb_rate = 0.0;
  double E_dot = 0.0;
  double B_dot = 0.0;
};

/// First-order shaping of the airspeed and altitude errors into rate demands,
/// limited, then expressed as energy-rate targets.
DesiredRates desired_rates(double airspeed_cmd, double altitude_cmd, double airspeed,
                           double altitude, const GuidanceGains& gains,
                           double g = kStandardGravity);

/// Trapezoidal update of E, B, E^d and B^d. `next` carries the new rates;
/// its integral fields are overwritten from `prev`.
EnergySignals integrate_energy_refs(const EnergySignals& prev, EnergySignals next, double dt);

/// First difference followed by a one-pole smoother. Used instead of true
/// state derivatives when rates must come from sampled measurements.
class RateEstimator {
public:
  explicit RateEstimator(double time_constant = 0.05) : tau_(time_constant) {}

  double update(double sample, double dt);
  void reset() { primed_ = false; rate_ = 0.0; }
  double rate() const { return rate_; }

private:
  double tau_;
  bool primed_ = false;
  double last_ = 0.0;
  double rate_ = 0.0;
};

}  // namespace tecsim
