#include "tecsim/airframe.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "tecsim/errors.hpp"

namespace tecsim {

void AirframeParams::update_derived() {
  InertiaTerms& in = inertia;
  in.gamma = Jx * Jz - Jxz * Jxz;
  in.g1 = Jxz * (Jx - Jy + Jz) / in.gamma;
  in.g2 = (Jz * (Jz - Jy) + Jxz * Jxz) / in.gamma;
  in.g3 = Jz / in.gamma;
  in.g4 = Jxz / in.gamma;
  in.g5 = (Jz - Jx) / Jy;
  in.g6 = Jxz / Jy;
  in.g7 = ((Jx - Jy) * Jx + Jxz * Jxz) / in.gamma;
  in.g8 = Jx / in.gamma;

  k_T2 = 0.5 * rho * S_prop * C_prop;
  k_T1 = k_T2 * k_motor * k_motor;
}

void AirframeParams::validate() const {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(std::string("airframe: ") + key + " " + what, key);
  };
  require(m > 0.0, "m", "must be > 0");
  require(g > 0.0, "g", "must be > 0");
  require(Jx > 0.0, "Jx", "must be > 0");
  require(Jy > 0.0, "Jy", "must be > 0");
  require(Jz > 0.0, "Jz", "must be > 0");
  require(Jx * Jz - Jxz * Jxz > 0.0, "Jxz", "makes the inertia tensor singular");
  require(rho > 0.0, "rho", "must be > 0");
  require(S > 0.0, "S", "must be > 0");
  require(b_span > 0.0, "b_span", "must be > 0");
  require(c_chord > 0.0, "c_chord", "must be > 0");
  require(S_prop > 0.0, "S_prop", "must be > 0");
  require(C_prop > 0.0, "C_prop", "must be > 0");
  require(k_motor > 0.0, "k_motor", "must be > 0");
  require(alpha_max > 0.0, "alpha_max", "must be > 0");
  require(delta_e_max > 0.0, "delta_e_max", "must be > 0");
  require(delta_a_max > 0.0, "delta_a_max", "must be > 0");
  require(delta_r_max > 0.0, "delta_r_max", "must be > 0");
  require(k_T1 > 0.0 && k_T2 > 0.0, "k_motor", "derived thrust constants are stale; call update_derived()");
}

AirframeParams AirframeParams::aerosonde() {
  AirframeParams p;
  p.update_derived();
  return p;
}

double propeller_thrust(double delta_t, double airspeed, const AirframeParams& params) {
  return params.k_T1 * delta_t * delta_t - params.k_T2 * airspeed * airspeed;
}

double drag_coefficient(double alpha, const AirframeParams& params) {
  if (params.quadratic_drag()) {
    const double cl = params.C_L0 + params.C_L_alpha * alpha;
    return params.C_D_p + cl * cl / (kPi * params.e_oswald * params.aspect_ratio());
  }
  return params.C_D0 + params.C_D_alpha * alpha;
}

double airspeed(const AircraftState& state, const Wind& wind) {
  const double ur = state.u - wind.x;
  const double vr = state.v - wind.y;
  const double wr = state.w - wind.z;
  return std::sqrt(ur * ur + vr * vr + wr * wr);
}

AeroForces aero_forces_moments(const AircraftState& state, const Wind& wind,
                               const ControlInputs& inputs, const AirframeParams& params) {
  const double ur = state.u - wind.x;
  const double vr = state.v - wind.y;
  const double wr = state.w - wind.z;
  if (!std::isfinite(ur) || !std::isfinite(vr) || !std::isfinite(wr)) {
    throw SimulationFault("aero: non-finite air-relative velocity");
  }

  AeroForces out;
  out.airspeed = std::sqrt(ur * ur + vr * vr + wr * wr);
  if (out.airspeed == 0.0) {
    return out;
  }
  out.alpha = std::atan2(wr, ur);
  out.beta = std::asin(std::clamp(vr / out.airspeed, -1.0, 1.0));

  const double Va = out.airspeed;
  const double qbar_S = 0.5 * params.rho * Va * Va * params.S;
  const double c_over_2V = params.c_chord / (2.0 * Va);
  const double b_over_2V = params.b_span / (2.0 * Va);
  const double alpha = out.alpha;
  const double beta = out.beta;

  out.C_L = params.C_L0 + params.C_L_alpha * alpha + params.C_L_q * c_over_2V * state.q +
            params.C_L_delta_e * inputs.delta_e;
  out.C_D = drag_coefficient(alpha, params) + params.C_D_q * c_over_2V * state.q +
            params.C_D_delta_e * inputs.delta_e;
  out.lift = qbar_S * out.C_L;
  out.drag = qbar_S * out.C_D;

  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  out.force.x = out.lift * sa - out.drag * ca;
  out.force.z = -out.lift * ca - out.drag * sa;
  out.force.y = qbar_S * (params.C_Y0 + params.C_Y_beta * beta + params.C_Y_p * b_over_2V * state.p +
                          params.C_Y_r * b_over_2V * state.r + params.C_Y_delta_a * inputs.delta_a +
                          params.C_Y_delta_r * inputs.delta_r);

  out.moment.x = qbar_S * params.b_span *
                 (params.C_l0 + params.C_l_beta * beta + params.C_l_p * b_over_2V * state.p +
                  params.C_l_r * b_over_2V * state.r + params.C_l_delta_a * inputs.delta_a +
                  params.C_l_delta_r * inputs.delta_r);
  out.moment.y = qbar_S * params.c_chord *
                 (params.C_m0 + params.C_m_alpha * alpha + params.C_m_q * c_over_2V * state.q +
                  params.C_m_delta_e * inputs.delta_e);
  out.moment.z = qbar_S * params.b_span *
                 (params.C_n0 + params.C_n_beta * beta + params.C_n_p * b_over_2V * state.p +
                  params.C_n_r * b_over_2V * state.r + params.C_n_delta_a * inputs.delta_a +
                  params.C_n_delta_r * inputs.delta_r);
  return out;
}

AircraftState state_derivative(const AircraftState& s, const ControlInputs& inputs,
                               const Wind& wind, const AirframeParams& params) {
  if (!(std::abs(s.theta) < kPi / 2.0 - kPitchSingularityMargin)) {
    std::ostringstream msg;
    msg << "Euler singularity: theta = " << s.theta << " rad";
    throw SimulationFault(msg.str());
  }

  const AeroForces aero = aero_forces_moments(s, wind, inputs, params);
  const double thrust = propeller_thrust(inputs.delta_t, aero.airspeed, params);

  const double cphi = std::cos(s.phi), sphi = std::sin(s.phi);
  const double cth = std::cos(s.theta), sth = std::sin(s.theta), tth = std::tan(s.theta);
  const double cpsi = std::cos(s.psi), spsi = std::sin(s.psi);
  const double m = params.m;
  const double g = params.g;
  const InertiaTerms& G = params.inertia;

  AircraftState d;
  d.north = cth * cpsi * s.u + (sphi * sth * cpsi - cphi * spsi) * s.v +
            (cphi * sth * cpsi + sphi * spsi) * s.w;
  d.east = cth * spsi * s.u + (sphi * sth * spsi + cphi * cpsi) * s.v +
           (cphi * sth * spsi - sphi * cpsi) * s.w;
  d.h = s.u * sth - s.v * sphi * cth - s.w * cphi * cth;

  d.u = s.r * s.v - s.q * s.w - g * sth + (aero.force.x + thrust) / m;
  d.v = s.p * s.w - s.r * s.u + g * cth * sphi + aero.force.y / m;
  d.w = s.q * s.u - s.p * s.v + g * cth * cphi + aero.force.z / m;

  d.phi = s.p + (s.q * sphi + s.r * cphi) * tth;
  d.theta = s.q * cphi - s.r * sphi;
  d.psi = (s.q * sphi + s.r * cphi) / cth;

  const double l = aero.moment.x;
  const double n = aero.moment.z;
  d.p = G.g1 * s.p * s.q - G.g2 * s.q * s.r + G.g3 * l + G.g4 * n;
  d.q = G.g5 * s.p * s.r - G.g6 * (s.p * s.p - s.r * s.r) + aero.moment.y / params.Jy;
  d.r = G.g7 * s.p * s.q - G.g1 * s.q * s.r + G.g4 * l + G.g8 * n;
  return d;
}

double airspeed_rate(const AircraftState& s, const AircraftState& d, const Wind& wind) {
  const double ur = s.u - wind.x;
  const double vr = s.v - wind.y;
  const double wr = s.w - wind.z;
  const double Va = std::sqrt(ur * ur + vr * vr + wr * wr);
  if (Va == 0.0) return 0.0;
  return (ur * d.u + vr * d.v + wr * d.w) / Va;
}

AircraftState TrimPoint::state() const {
  AircraftState s;
  s.h = altitude;
  s.u = airspeed * std::cos(alpha);
  s.w = airspeed * std::sin(alpha);
  s.theta = theta;
  return s;
}

ControlInputs TrimPoint::inputs() const {
  ControlInputs in;
  in.delta_e = delta_e;
  in.delta_t = delta_t;
  return in;
}

namespace {

Eigen::Vector3d trim_residual(const Eigen::Vector3d& z, double airspeed, double altitude,
                              const AirframeParams& params) {
  TrimPoint tp;
  tp.airspeed = airspeed;
  tp.altitude = altitude;
  tp.alpha = z[0];
  tp.theta = z[0];
  tp.delta_e = z[1];
  tp.delta_t = z[2];
  const AircraftState d = state_derivative(tp.state(), tp.inputs(), Wind{}, params);
  return {d.u, d.w, d.q};
}

}  // namespace

TrimPoint trim_level_flight(double airspeed, double altitude, const AirframeParams& params) {
  if (!(airspeed > 0.0)) {
    throw TrimError("trim: airspeed must be positive");
  }
  constexpr int kMaxIterations = 50;
  constexpr double kTolerance = 1e-11;
  constexpr double kFdStep = 1e-7;

  Eigen::Vector3d z(0.05, 0.0, 0.5);
  Eigen::Vector3d r = trim_residual(z, airspeed, altitude, params);
  int it = 0;
  for (; it < kMaxIterations && r.norm() > kTolerance; ++it) {
    Eigen::Matrix3d J;
    for (int j = 0; j < 3; ++j) {
      Eigen::Vector3d zp = z, zm = z;
      zp[j] += kFdStep;
      zm[j] -= kFdStep;
      J.col(j) = (trim_residual(zp, airspeed, altitude, params) -
                  trim_residual(zm, airspeed, altitude, params)) /
                 (2.0 * kFdStep);
    }
    const Eigen::Vector3d step = J.fullPivLu().solve(-r);
    if (!step.allFinite()) break;

    // Backtracking keeps the iterate inside the attached-flow region.
    double lambda = 1.0;
    Eigen::Vector3d z_next = z + step;
    Eigen::Vector3d r_next = trim_residual(z_next, airspeed, altitude, params);
    while (r_next.norm() >= r.norm() && lambda > 1e-4) {
      lambda *= 0.5;
      z_next = z + lambda * step;
      r_next = trim_residual(z_next, airspeed, altitude, params);
    }
    z = z_next;
    r = r_next;
  }

  std::ostringstream where;
  where << " at V_a = " << airspeed << " m/s";
  if (!(r.norm() <= 1e-8)) {
    throw TrimError("trim: Newton iteration did not converge" + where.str());
  }
  if (!(z[2] > 0.0 && z[2] < 1.0)) {
    throw TrimError("trim: required throttle outside (0, 1)" + where.str());
  }
  if (std::abs(z[0]) > params.alpha_max) {
    throw TrimError("trim: angle of attack beyond alpha_max" + where.str());
  }
  if (std::abs(z[1]) > params.delta_e_max) {
    throw TrimError("trim: elevator beyond delta_e_max" + where.str());
  }

  TrimPoint tp;
  tp.airspeed = airspeed;
  tp.altitude = altitude;
  tp.alpha = z[0];
  tp.theta = z[0];
  tp.delta_e = z[1];
  tp.delta_t = z[2];
  tp.thrust = propeller_thrust(tp.delta_t, airspeed, params);
  tp.residual = r.norm();
  tp.iterations = it;
  return tp;
}

}  // namespace tecsim
