#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "tecsim/airframe.hpp"
#include "tecsim/energy.hpp"
#include "tecsim/errors.hpp"

namespace {

using namespace tecsim;

// Matrix-form rigid-body oracle: translational and rotational dynamics from
// Newton-Euler with the full inertia tensor, kinematics from rotation matrices.
AircraftState oracle_derivative(const AircraftState& s, const ControlInputs& in, const Wind& wind,
                                const AirframeParams& p) {
  const Eigen::Vector3d v(s.u, s.v, s.w);
  const Eigen::Vector3d omega(s.p, s.q, s.r);
  const Eigen::Vector3d vr = v - Eigen::Vector3d(wind.x, wind.y, wind.z);
  const double Va = vr.norm();
  const double alpha = std::atan2(vr.z(), vr.x());
  const double beta = std::asin(vr.y() / Va);
  const double qbar = 0.5 * p.rho * Va * Va;

  double CD;
  const double CL_static = p.C_L0 + p.C_L_alpha * alpha;
  if (p.C_D_p > 0.0 && p.e_oswald > 0.0) {
    CD = p.C_D_p + CL_static * CL_static / (kPi * p.e_oswald * p.b_span * p.b_span / p.S);
  } else {
    CD = p.C_D0 + p.C_D_alpha * alpha;
  }
  CD += p.C_D_q * p.c_chord / (2 * Va) * s.q + p.C_D_delta_e * in.delta_e;
  const double CL = CL_static + p.C_L_q * p.c_chord / (2 * Va) * s.q + p.C_L_delta_e * in.delta_e;
  const double b2v = p.b_span / (2 * Va);
  const double CY = p.C_Y0 + p.C_Y_beta * beta + p.C_Y_p * b2v * s.p + p.C_Y_r * b2v * s.r +
                    p.C_Y_delta_a * in.delta_a + p.C_Y_delta_r * in.delta_r;
  const double Cl = p.C_l0 + p.C_l_beta * beta + p.C_l_p * b2v * s.p + p.C_l_r * b2v * s.r +
                    p.C_l_delta_a * in.delta_a + p.C_l_delta_r * in.delta_r;
  const double Cm = p.C_m0 + p.C_m_alpha * alpha + p.C_m_q * p.c_chord / (2 * Va) * s.q +
                    p.C_m_delta_e * in.delta_e;
  const double Cn = p.C_n0 + p.C_n_beta * beta + p.C_n_p * b2v * s.p + p.C_n_r * b2v * s.r +
                    p.C_n_delta_a * in.delta_a + p.C_n_delta_r * in.delta_r;

  // Stability axes to body axes: rotate (-D, -L) by alpha about y.
  const Eigen::Vector3d f_stab(-qbar * p.S * CD, qbar * p.S * CY, -qbar * p.S * CL);
  const Eigen::Matrix3d Ry =
      Eigen::AngleAxisd(-alpha, Eigen::Vector3d::UnitY()).toRotationMatrix();
  Eigen::Vector3d f_aero = Ry * Eigen::Vector3d(f_stab.x(), 0.0, f_stab.z());
  f_aero.y() = f_stab.y();

  const Eigen::Matrix3d R_nb = (Eigen::AngleAxisd(s.psi, Eigen::Vector3d::UnitZ()) *
                                Eigen::AngleAxisd(s.theta, Eigen::Vector3d::UnitY()) *
                                Eigen::AngleAxisd(s.phi, Eigen::Vector3d::UnitX()))
                                   .toRotationMatrix();
  const Eigen::Vector3d gravity_body = R_nb.transpose() * Eigen::Vector3d(0, 0, p.m * p.g);
  const double thrust = p.k_T1 * in.delta_t * in.delta_t - p.k_T2 * Va * Va;
  const Eigen::Vector3d F = f_aero + gravity_body + Eigen::Vector3d(thrust, 0, 0);

  Eigen::Matrix3d J;
  J << p.Jx, 0, -p.Jxz, 0, p.Jy, 0, -p.Jxz, 0, p.Jz;
  const Eigen::Vector3d M(qbar * p.S * p.b_span * Cl, qbar * p.S * p.c_chord * Cm,
                          qbar * p.S * p.b_span * Cn);

  const Eigen::Vector3d v_dot = F / p.m - omega.cross(v);
  const Eigen::Vector3d omega_dot = J.partialPivLu().solve(M - omega.cross(J * omega));
  const Eigen::Vector3d pos_dot = R_nb * v;

  Eigen::Matrix3d E;
  E << 1, std::sin(s.phi) * std::tan(s.theta), std::cos(s.phi) * std::tan(s.theta),  //
      0, std::cos(s.phi), -std::sin(s.phi),                                          //
      0, std::sin(s.phi) / std::cos(s.theta), std::cos(s.phi) / std::cos(s.theta);
  const Eigen::Vector3d euler_dot = E * omega;

  AircraftState d;
  d.north = pos_dot.x();
  d.east = pos_dot.y();
  d.h = -pos_dot.z();
  d.u = v_dot.x();
  d.v = v_dot.y();
  d.w = v_dot.z();
  d.phi = euler_dot.x();
  d.theta = euler_dot.y();
  d.psi = euler_dot.z();
  d.p = omega_dot.x();
  d.q = omega_dot.y();
  d.r = omega_dot.z();
  return d;
}

TEST(Airframe, DerivativeMatchesMatrixFormOracleOnRandomStates) {
  const AirframeParams params = AirframeParams::aerosonde();
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    AircraftState s;
    s.north = 100 * unit(rng);
    s.east = 100 * unit(rng);
    s.h = 100 + 50 * unit(rng);
    s.u = 30 + 8 * unit(rng);
    s.v = 3 * unit(rng);
    s.w = 4 * unit(rng);
    s.phi = 0.8 * unit(rng);
    s.theta = 0.6 * unit(rng);
    s.psi = 3.0 * unit(rng);
    s.p = 0.5 * unit(rng);
    s.q = 0.5 * unit(rng);
    s.r = 0.5 * unit(rng);
    ControlInputs in{0.3 * unit(rng), 0.3 * unit(rng), 0.3 * unit(rng), 0.5 + 0.5 * unit(rng)};
    const Wind wind{2 * unit(rng), 2 * unit(rng), 2 * unit(rng)};

    const auto got = state_derivative(s, in, wind, params).to_vector();
    const auto want = oracle_derivative(s, in, wind, params).to_vector();
    for (std::size_t k = 0; k < AircraftState::kSize; ++k) {
      ASSERT_NEAR(got[k], want[k], 1e-9 * (1.0 + std::abs(want[k]))) << "sample " << i << " index " << k;
    }
  }
}

TEST(Airframe, PropellerThrustFormula) {
  const AirframeParams p = AirframeParams::aerosonde();
  const double k_T2 = 0.5 * 1.2682 * 0.2027 * 1.0;
  EXPECT_NEAR(p.k_T2, k_T2, 1e-15);
  EXPECT_NEAR(p.k_T1, k_T2 * 6400.0, 1e-12);
  EXPECT_NEAR(propeller_thrust(0.5, 35.0, p), k_T2 * (6400.0 * 0.25 - 35.0 * 35.0), 1e-12);
  EXPECT_LT(propeller_thrust(0.0, 35.0, p), 0.0);
}

TEST(Airframe, LinearDragWhenPolarDisabled) {
  AirframeParams p = AirframeParams::aerosonde();
  p.C_D_p = 0.0;
  p.update_derived();
  EXPECT_DOUBLE_EQ(drag_coefficient(0.1, p), 0.03 + 0.30 * 0.1);
}

TEST(Airframe, QuadraticPolarAtZeroLift) {
  const AirframeParams p = AirframeParams::aerosonde();
  const double alpha0 = -p.C_L0 / p.C_L_alpha;
  EXPECT_NEAR(drag_coefficient(alpha0, p), p.C_D_p, 1e-15);
}

TEST(Airframe, TrimAtCruiseIsAnEquilibrium) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  EXPECT_LT(trim.residual, 1e-8);
  EXPECT_DOUBLE_EQ(trim.theta, trim.alpha);
  EXPECT_GT(trim.delta_t, 0.0);
  EXPECT_LT(trim.delta_t, 1.0);
  EXPECT_LT(std::abs(trim.alpha), params.alpha_max);

  const AircraftState d = state_derivative(trim.state(), trim.inputs(), Wind{}, params);
  EXPECT_NEAR(d.u, 0.0, 1e-8);
  EXPECT_NEAR(d.w, 0.0, 1e-8);
  EXPECT_NEAR(d.q, 0.0, 1e-8);
  EXPECT_NEAR(d.h, 0.0, 1e-9);
  EXPECT_NEAR(d.north, 35.0, 1e-9);
  EXPECT_NEAR(airspeed(trim.state(), Wind{}), 35.0, 1e-12);
}

TEST(Airframe, TrimThrustBalancesDragAlongTheFlightPath) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  const AeroForces aero = aero_forces_moments(trim.state(), Wind{}, trim.inputs(), params);
  // Level flight: T cos(alpha) = D and T sin(alpha) + L = m g.
  EXPECT_NEAR(trim.thrust * std::cos(trim.alpha), aero.drag, 1e-6);
  EXPECT_NEAR(trim.thrust * std::sin(trim.alpha) + aero.lift, params.m * params.g, 1e-6);
}

TEST(Airframe, TrimOutsideEnvelopeThrows) {
  const AirframeParams params = AirframeParams::aerosonde();
  EXPECT_THROW(trim_level_flight(8.0, 100.0, params), TrimError);
  EXPECT_THROW(trim_level_flight(120.0, 100.0, params), TrimError);
}

TEST(Airframe, EulerSingularityIsAFault) {
  const AirframeParams params = AirframeParams::aerosonde();
  AircraftState s = trim_level_flight(35.0, 100.0, params).state();
  s.theta = kPi / 2.0;
  EXPECT_THROW(state_derivative(s, ControlInputs{}, Wind{}, params), SimulationFault);
}

TEST(Airframe, ZeroStepLeavesStateUnchanged) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  AircraftState s = trim.state();
  s.q = 0.1;
  s.phi = 0.2;
  EXPECT_EQ(step_rk4(s, trim.inputs(), Wind{}, 0.0, params), s);
}

AircraftState propagate(double dt, double duration, const AirframeParams& params) {
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  AircraftState s = trim.state();
  s.q = 0.2;
  s.p = 0.1;
  ControlInputs in = trim.inputs();
  in.delta_e += 0.05;
  in.delta_a = 0.02;
  const auto steps = static_cast<int>(std::lround(duration / dt));
  for (int k = 0; k < steps; ++k) s = step_rk4(s, in, Wind{1.0, 0.5, -0.3}, dt, params);
  return s;
}

double state_error(const AircraftState& a, const AircraftState& b) {
  const auto x = a.to_vector();
  const auto y = b.to_vector();
  double e = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) e = std::max(e, std::abs(x[k] - y[k]));
  return e;
}

TEST(Airframe, Rk4ConvergesAtFourthOrderOnTheFullModel) {
  const AirframeParams params = AirframeParams::aerosonde();
  const AircraftState reference = propagate(0.00125, 2.0, params);
  const double e1 = state_error(propagate(0.04, 2.0, params), reference);
  const double e2 = state_error(propagate(0.02, 2.0, params), reference);
  const double e3 = state_error(propagate(0.01, 2.0, params), reference);
  EXPECT_GE(std::log2(e1 / e2), 3.8);
  EXPECT_GE(std::log2(e2 / e3), 3.8);
}

TEST(Airframe, AirspeedRateMatchesCentralDifference) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  AircraftState s = trim.state();
  s.q = 0.1;
  s.v = 1.0;
  ControlInputs in = trim.inputs();
  in.delta_t = 0.8;
  const Wind wind{2.0, -1.0, 0.5};
  const double h = 1e-4;
  const double fwd = airspeed(step_rk4(s, in, wind, h, params), wind);
  const double back = airspeed(step_rk4(s, in, wind, -h, params), wind);
  const double fd = (fwd - back) / (2 * h);
  const AircraftState d = state_derivative(s, in, wind, params);
  EXPECT_NEAR(airspeed_rate(s, d, wind), fd, 1e-6);
}

TEST(Airframe, EnergyRateEqualsSpecificExcessPowerInLevelWingsFlight) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  AircraftState s = trim.state();
  ControlInputs in = trim.inputs();
  in.delta_t = 0.6;
  in.delta_e += 0.01;
  for (int k = 0; k <= 300; ++k) {
    if (k % 30 == 0) {
      const AircraftState d = state_derivative(s, in, Wind{}, params);
      const AeroForces aero = aero_forces_moments(s, Wind{}, in, params);
      const double T = propeller_thrust(in.delta_t, aero.airspeed, params);
      const EnergyRates rates =
          energy_rates(airspeed_rate(s, d, Wind{}), d.h, aero.airspeed, params.g);
      ASSERT_LT(std::abs(aero.alpha), 5.0 * kPi / 180.0);
      EXPECT_NEAR(rates.E_dot, (T - aero.drag) / (params.m * params.g), 0.01);
      // Exact form with the thrust component along the velocity.
      EXPECT_NEAR(rates.E_dot, (T * std::cos(aero.alpha) - aero.drag) / (params.m * params.g), 1e-9);
    }
    s = step_rk4(s, in, Wind{}, 0.01, params);
  }
}

}  // namespace
