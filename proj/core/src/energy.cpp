#include "tecsim/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tecsim/errors.hpp"

namespace tecsim {

double total_energy(double mass, double airspeed, double altitude, double g) {
  return 0.5 * mass * airspeed * airspeed + mass * g * altitude;
}

EnergyRates energy_rates(double airspeed_rate, double climb_rate, double airspeed, double g) {
  if (!(airspeed > kMinEnergyAirspeed)) {
    throw LowAirspeedError("energy rates undefined below " + std::to_string(kMinEnergyAirspeed) +
                           " m/s airspeed");
  }
  const double kinetic = airspeed_rate / g;
  const double potential = climb_rate / airspeed;
  return {kinetic + potential, potential - kinetic};
}

DesiredRates desired_rates(double airspeed_cmd, double altitude_cmd, double airspeed,
                           double altitude, const GuidanceGains& gains, double g) {
  DesiredRates d;
  d.airspeed_rate = std::clamp(gains.k_V * (airspeed_cmd - airspeed), -gains.max_acceleration,
                               gains.max_acceleration);
  d.climb_rate = std::clamp(gains.k_h * (altitude_cmd - altitude), -gains.max_climb_rate,
                            gains.max_climb_rate);
  const EnergyRates r = energy_rates(d.airspeed_rate, d.climb_rate, airspeed, g);
  d.E_dot = r.E_dot;
  d.B_dot = r.B_dot;
  return d;
}

EnergySignals integrate_energy_refs(const EnergySignals& prev, EnergySignals next, double dt) {
  const double half = 0.5 * dt;
  next.E = prev.E + half * (prev.E_dot + next.E_dot);
  next.B = prev.B + half * (prev.B_dot + next.B_dot);
  next.E_desired = prev.E_desired + half * (prev.E_dot_desired + next.E_dot_desired);
  next.B_desired = prev.B_desired + half * (prev.B_dot_desired + next.B_dot_desired);
  return next;
}

double RateEstimator::update(double sample, double dt) {
  if (!primed_) {
    primed_ = true;
    last_ = sample;
    return rate_;
  }
  const double raw = (sample - last_) / dt;
  last_ = sample;
  const double alpha = dt / (tau_ + dt);
  rate_ += alpha * (raw - rate_);
  return rate_;
}

}  // namespace tecsim
