#pragma once

#include <array>
#include <cmath>

#include "tecsim/integrator.hpp"

namespace tecsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kStandardGravity = 9.81;

/// Margin below pi/2 at which the Euler-angle kinematics are refused.
inline constexpr double kPitchSingularityMargin = 1e-3;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Rigid-body state. Position is north/east/altitude (altitude positive up),
/// velocities and rates are expressed in body axes.
struct AircraftState {
  static constexpr std::size_t kSize = 12;
  using Vector = std::array<double, kSize>;

  double north = 0.0;
  double east = 0.0;
  double h = 0.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  Vector to_vector() const {
    return {north, east, h, u, v, w, phi, theta, psi, p, q, r};
  }
  static AircraftState from_vector(const Vector& x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7], x[8], x[9], x[10], x[11]};
  }

  friend bool operator==(const AircraftState&, const AircraftState&) = default;
};

/// Body-frame wind velocity (m/s). Air-relative velocity is body velocity minus wind.
using Wind = Vec3;

struct ControlInputs {
  double delta_e = 0.0;  ///< elevator, rad, positive trailing edge up (nose up)
  double delta_a = 0.0;  ///< aileron, rad
  double delta_r = 0.0;  ///< rudder, rad
  double delta_t = 0.0;  ///< throttle fraction in [0, 1]
};

/// Inertia-ratio constants of the rigid-body rotational equations.
struct InertiaTerms {
  double gamma = 0.0;
  double g1 = 0.0, g2 = 0.0, g3 = 0.0, g4 = 0.0;
  double g5 = 0.0, g6 = 0.0, g7 = 0.0, g8 = 0.0;
};

/// Mass, inertia, aerodynamic and propulsion constants of the airframe.
///
/// Call `update_derived()` after changing any raw field; loaders and
/// `aerosonde()` return parameters with the derived terms already filled in.
struct AirframeParams {
  double m = 13.5;
  double g = kStandardGravity;
  double Jx = 0.8244;
  double Jy = 1.135;
  double Jz = 1.759;
  double Jxz = 0.1204;
  double rho = 1.2682;
  double S = 0.55;
  double b_span = 2.8956;
  double c_chord = 0.18994;

  // Longitudinal coefficients. Elevator deflection is positive nose-up.
  double C_L0 = 0.28;
  double C_L_alpha = 3.45;
  double C_L_q = 0.0;
  double C_L_delta_e = 0.36;
  double C_D0 = 0.03;
  double C_D_alpha = 0.30;
  double C_D_q = 0.0;
  double C_D_delta_e = 0.0;
  // Quadratic drag polar C_D = C_D_p + C_L^2 / (pi e AR); used when both are > 0.
  double C_D_p = 0.0437;
  double e_oswald = 0.9;
  double C_m0 = -0.02338;
  double C_m_alpha = -0.38;
  double C_m_q = -3.6;
  double C_m_delta_e = 0.5;

  // Lateral-directional coefficients.
  double C_Y0 = 0.0;
  double C_Y_beta = -0.98;
  double C_Y_p = 0.0;
  double C_Y_r = 0.0;
  double C_Y_delta_a = 0.0;
  double C_Y_delta_r = -0.17;
  double C_l0 = 0.0;
  double C_l_beta = -0.12;
  double C_l_p = -0.26;
  double C_l_r = 0.14;
  double C_l_delta_a = 0.08;
  double C_l_delta_r = 0.105;
  double C_n0 = 0.0;
  double C_n_beta = 0.25;
  double C_n_p = 0.022;
  double C_n_r = -0.35;
  double C_n_delta_a = 0.06;
  double C_n_delta_r = -0.032;

  // Propulsion.
  double S_prop = 0.2027;
  double C_prop = 1.0;
  double k_motor = 80.0;

  // Envelope and actuator bounds.
  double alpha_max = 0.4712;
  double delta_e_max = 45.0 * kPi / 180.0;
  double delta_a_max = 45.0 * kPi / 180.0;
  double delta_r_max = 45.0 * kPi / 180.0;

  // Derived, see update_derived().
  InertiaTerms inertia;
  double k_T1 = 0.0;
  double k_T2 = 0.0;

  bool quadratic_drag() const { return C_D_p > 0.0 && e_oswald > 0.0; }
  double aspect_ratio() const { return b_span * b_span / S; }

  /// Recomputes the inertia terms and thrust constants from the raw fields.
  void update_derived();

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;

  /// The Aerosonde small-UAV set with derived terms filled in.
  static AirframeParams aerosonde();
};

/// T = k_T1 * delta_t^2 - k_T2 * V_a^2. Negative values are windmilling drag.
double propeller_thrust(double delta_t, double airspeed, const AirframeParams& params);

/// Air-data quantities and the aerodynamic force/moment resolved in body axes.
struct AeroForces {
  Vec3 force;   ///< N, excludes thrust and gravity
  Vec3 moment;  ///< N*m (roll, pitch, yaw)
  double airspeed = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double lift = 0.0;
  double drag = 0.0;
  double C_L = 0.0;
  double C_D = 0.0;
};

/// Drag coefficient at angle of attack `alpha` with zero q and elevator,
/// using the polar selected by the parameters.
double drag_coefficient(double alpha, const AirframeParams& params);

AeroForces aero_forces_moments(const AircraftState& state, const Wind& wind,
                               const ControlInputs& inputs, const AirframeParams& params);

/// Full 12-state time derivative. Throws SimulationFault near the Euler singularity.
AircraftState state_derivative(const AircraftState& state, const ControlInputs& inputs,
                               const Wind& wind, const AirframeParams& params);

/// Airspeed time-derivative implied by a body-acceleration derivative, with the
/// wind held fixed: (u_r*du + v_r*dv + w_r*dw) / V_a.
double airspeed_rate(const AircraftState& state, const AircraftState& derivative,
                     const Wind& wind);

double airspeed(const AircraftState& state, const Wind& wind);

/// One classical RK4 step. `wind_at(tau)` supplies the wind at offset tau in [0, dt].
template <typename WindProvider>
AircraftState step_rk4_varying(const AircraftState& state, const ControlInputs& inputs,
                       WindProvider&& wind_at, double dt, const AirframeParams& params) {
  if (dt == 0.0) {
    return state;
  }
  auto f = [&](double tau, const AircraftState::Vector& x) {
    return state_derivative(AircraftState::from_vector(x), inputs, wind_at(tau), params)
        .to_vector();
  };
  return AircraftState::from_vector(rk4_step(f, 0.0, state.to_vector(), dt));
}

inline AircraftState step_rk4(const AircraftState& state, const ControlInputs& inputs,
                              const Wind& wind, double dt, const AirframeParams& params) {
  return step_rk4_varying(state, inputs, [&](double) { return wind; }, dt, params);
}

struct TrimPoint {
  double airspeed = 0.0;
  double altitude = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
  double delta_e = 0.0;
  double delta_t = 0.0;
  double thrust = 0.0;
  double residual = 0.0;  ///< norm of (du, dw, dq) at the solution
  int iterations = 0;

  AircraftState state() const;
  ControlInputs inputs() const;
};

/// Wings-level, constant-altitude trim at the given airspeed. Solves for
/// (alpha, delta_e, delta_t) with theta = alpha. Throws TrimError when the
/// point is outside the envelope or Newton fails to converge.
TrimPoint trim_level_flight(double airspeed, double altitude, const AirframeParams& params);

}  // namespace tecsim
