#pragma once

#include "tecsim/airframe.hpp"

namespace tecsim {

struct PitchPidGains {
  double k_p = 4.0;
  double k_i = 1.0;
  double k_d = 0.8;
  double delta_e_max = 45.0 * kPi / 180.0;   ///< rad
  double slew_rate = 200.0 * kPi / 180.0;    ///< rad/s, <= 0 disables
};

/// Pitch-attitude PID: delta_e = k_p e + k_i * integral(e) - k_d q.
///
/// The integral is trapezoidal and clamped to the range that can be expressed
/// by the elevator limit; it is held while the output is saturated in the
/// direction the error would push it.
class PitchPid {
public:
  explicit PitchPid(const PitchPidGains& gains = {});

  double update(double theta_desired, double theta, double q, double dt);

  /// Sets the integral so that zero error and zero rate yield `delta_e`.
  void initialize(double delta_e);

  double integral() const { return integral_; }
  double integral_limit() const;
  double last_output() const { return output_; }
  const PitchPidGains& gains() const { return gains_; }

private:
  PitchPidGains gains_;
  double integral_ = 0.0;
  double last_error_ = 0.0;
  bool primed_ = false;
  double output_ = 0.0;
  bool have_output_ = false;
};

struct ThrottleCommand {
  double delta_t = 0.0;
  bool saturated = false;
};

/// Open-loop inversion of the propeller model: sqrt((T + k_T2 V^2) / k_T1),
/// clamped to [0, 1]. A negative radicand maps to 0 with the saturation flag.
ThrottleCommand throttle_from_thrust(double thrust_desired, double airspeed,
                                     const AirframeParams& params);

struct LateralGains {
  double k_p_phi = 1.0;    ///< aileron per rad of roll error
  double k_d_phi = 0.2;    ///< aileron per rad/s of roll rate
  double k_psi = 1.0;      ///< roll command per rad of heading error
  double phi_max = 20.0 * kPi / 180.0;
  double k_yaw_damper = 0.3;  ///< rudder per rad/s of yaw rate
  double delta_a_max = 45.0 * kPi / 180.0;
  double delta_r_max = 45.0 * kPi / 180.0;
};

struct LateralCommand {
  double delta_a = 0.0;
  double delta_r = 0.0;
};

/// Wings-level / heading hold. Heading error sets a capped roll command,
/// aileron is PD on roll, rudder is a yaw damper.
LateralCommand lateral_hold(double phi, double p, double psi, double psi_cmd, double r,
                            const LateralGains& gains);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double angle);

}  // namespace tecsim
