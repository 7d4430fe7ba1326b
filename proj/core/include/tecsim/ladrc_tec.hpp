#pragma once

#include "tecsim/allocation.hpp"
#include "tecsim/energy.hpp"
#include "tecsim/leso.hpp"

namespace tecsim {

struct LadrcTecGains {
  double k_E = 1.0;  ///< energy-channel proportional gain, 1/s
  double k_B = 0.8;  ///< distribution-channel proportional gain, 1/s
  double b_E = 1.0;
  double b_B = 1.0;
  double omega_o = 2.5;  ///< bandwidth of both observers, rad/s
  double theta_max = 30.0 * kPi / 180.0;
  double theta_rate_limit = 0.0;     ///< rad/s, <= 0 disables
  double throttle_rate_limit = 0.0;  ///< 1/s, <= 0 disables
  bool disturbance_feedforward = true;
  double divergence_bound = 1e6;
};

struct LadrcTecCommand {
  double delta_t = 0.0;
  double theta = 0.0;
  double u_E = 0.0;  ///< channel demand before allocation
  double u_B = 0.0;
  bool saturated = false;
};

/// Energy-state LADRC with MIMO allocation.
///
/// Each channel treats its specific energy as a first-order plant
///   E_dot = b_E u_E + f_E,   B_dot = b_B u_B + f_B
/// observed by a LESO on (E, f_E) and closed with
///   u_E = k_E (E^d - E_hat) - f_E_hat / b_E.
/// The pair (b_E u_E, b_B u_B) is mapped to (delta_t, theta) deviations from
/// trim through A^-1. After saturation the input actually applied is mapped
/// back through A and fed to the observers on the next step.
class LadrcTec {
public:
  LadrcTec(const LadrcTecGains& gains, const AllocationMatrix& allocation,
           const TrimPoint& trim, double dt);

  /// Observer update with the current measurements, then control.
  LadrcTecCommand update(const EnergySignals& signals);

  /// Zeros both observers at the given measurements and forgets past inputs.
  void reset(double E0 = 0.0, double B0 = 0.0);

  const Leso& energy_observer() const { return energy_observer_; }
  const Leso& distribution_observer() const { return distribution_observer_; }
  const AllocationMatrix& allocation() const { return allocation_; }
  const LadrcTecGains& gains() const { return gains_; }

private:
  LadrcTecGains gains_;
  AllocationMatrix allocation_;
  TrimPoint trim_;
  double dt_;
  Leso energy_observer_;
  Leso distribution_observer_;
  double applied_u_E_ = 0.0;
  double applied_u_B_ = 0.0;
  double last_delta_t_ = 0.0;
  double last_theta_ = 0.0;
};

}  // namespace tecsim
