#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "tecsim/errors.hpp"
#include "tecsim/leso.hpp"

namespace {

using namespace tecsim;

LesoConfig first_order(double omega_o, double dt = 0.001) {
  LesoConfig c;
  c.order = 1;
  c.omega_o = omega_o;
  c.dt = dt;
  return c;
}

TEST(Leso, GainsAreBinomialInBandwidth) {
  const Eigen::VectorXd l1 = leso_gains(first_order(10.0));
  ASSERT_EQ(l1.size(), 2);
  EXPECT_DOUBLE_EQ(l1[0], 20.0);
  EXPECT_DOUBLE_EQ(l1[1], 100.0);

  LesoConfig c2 = first_order(1.0);
  c2.order = 2;
  const Eigen::VectorXd l2 = leso_gains(c2);
  ASSERT_EQ(l2.size(), 3);
  EXPECT_DOUBLE_EQ(l2[0], 3.0);
  EXPECT_DOUBLE_EQ(l2[1], 3.0);
  EXPECT_DOUBLE_EQ(l2[2], 1.0);
}

TEST(Leso, ErrorDynamicsHaveAllPolesAtBandwidth) {
  for (int n = 1; n <= 4; ++n) {
    LesoConfig c = first_order(7.0);
    c.order = n;
    const Eigen::VectorXd L = leso_gains(c);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) A(i, i + 1) = 1.0;
    A.col(0) -= L;
    // Characteristic polynomial coefficients of A - L C against (s + w)^(n+1).
    Eigen::MatrixXd M = A + 7.0 * Eigen::MatrixXd::Identity(n + 1, n + 1);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(n + 1, n + 1);
    for (int k = 0; k < n + 1; ++k) P = P * M;
    EXPECT_LT(P.norm(), 1e-6 * std::pow(7.0, n + 1)) << "order " << n;
  }
}

TEST(Leso, ConfigValidation) {
  LesoConfig c = first_order(10.0);
  c.b0 = 0.0;
  EXPECT_THROW(Leso{c}, ConfigError);
  c = first_order(10.0);
  c.order = 0;
  EXPECT_THROW(Leso{c}, ConfigError);
  c = first_order(60.0, 0.01);
  EXPECT_THROW(Leso{c}, ConfigError);
}

// Constant disturbance d on y' = d + b0 u with u = 0; observer starts at y.
double disturbance_error_at(double omega_o, double d, double t_end, double dt) {
  Leso leso(first_order(omega_o, dt));
  double y = 0.0;
  const int n = static_cast<int>(std::lround(t_end / dt));
  for (int k = 0; k < n; ++k) {
    leso.update(0.0, y);
    y += d * dt;
  }
  leso.update(0.0, y);
  return std::abs(leso.disturbance() - d) / std::abs(d);
}

TEST(Leso, ConstantDisturbanceEnvelope) {
  // Continuous error envelope (1 + w t) exp(-w t) for a step in f.
  const double w = 10.0;
  const double envelope_half = (1 + w * 0.5) * std::exp(-w * 0.5);
  EXPECT_NEAR(disturbance_error_at(w, 2.0, 0.5, 1e-4), envelope_half, 2e-3);
  EXPECT_LT(disturbance_error_at(w, 2.0, 0.67, 1e-4), 0.01);
  EXPECT_LT(disturbance_error_at(w, 2.0, 1.0, 0.01), 0.01);
}

TEST(Leso, TracksInputDrivenPlantWithoutDisturbance) {
  Leso leso(first_order(5.0, 0.01));
  double y = 0.0;
  for (int k = 0; k < 500; ++k) {
    const double u = std::sin(0.01 * k);
    leso.update(u, y);
    y += u * 0.01;
  }
  EXPECT_NEAR(leso.output(), y, 1e-3);
  EXPECT_NEAR(leso.disturbance(), 0.0, 1e-2);
}

TEST(Leso, DivergenceRaisesFault) {
  LesoConfig c = first_order(10.0, 0.01);
  c.divergence_bound = 10.0;
  Leso leso(c);
  EXPECT_THROW(
      {
        for (int k = 0; k < 1000; ++k) leso.update(0.0, 1e3);
      },
      SimulationFault);
}

TEST(Leso, ZeroInputsKeepZeroEstimate) {
  Leso leso(first_order(10.0, 0.01));
  for (int k = 0; k < 100; ++k) leso.update(0.0, 0.0);
  EXPECT_EQ(leso.estimate().norm(), 0.0);
}

TEST(Leso, SecondOrderTracksDoubleIntegrator) {
  LesoConfig c = first_order(20.0, 0.001);
  c.order = 2;
  Leso leso(c);
  double y = 0.0, yd = 0.0;
  for (int k = 0; k < 3000; ++k) {
    leso.update(1.0, y);
    y += 0.001 * yd + 0.5 * 0.001 * 0.001;
    yd += 0.001;
  }
  leso.update(1.0, y);
  // After an update the estimate refers to the next sample.
  EXPECT_NEAR(leso.estimate()[0], y + 0.001 * yd + 0.5e-6, 1e-3);
  EXPECT_NEAR(leso.estimate()[1], yd + 0.001, 1e-2);
  EXPECT_NEAR(leso.disturbance(), 0.0, 2e-2);
}

TEST(Leso, ResetSetsOutputAndZerosRest) {
  LesoConfig c = first_order(10.0, 0.01);
  c.order = 2;
  Leso leso(c);
  leso.update(1.0, 3.0);
  leso.reset(4.0);
  EXPECT_EQ(leso.estimate()[0], 4.0);
  EXPECT_EQ(leso.estimate()[1], 0.0);
  EXPECT_EQ(leso.estimate()[2], 0.0);
}

TEST(Lsefc, FirstOrderLaw) {
  EXPECT_EQ(lsefc_first_order(0.7, 0.7, 0.0, 2.0, 1.0), 0.0);
  EXPECT_EQ(lsefc_first_order(1.0, 0.0, 0.0, 2.0, 1.0), 2.0);
  EXPECT_EQ(lsefc_first_order(0.3, 0.3, 3.0, 2.0, 1.0), -3.0);
  EXPECT_DOUBLE_EQ(lsefc_first_order(1.0, 0.5, 0.2, 4.0, 2.0), 4.0 * 0.5 - 0.1);
  EXPECT_THROW(lsefc_first_order(1.0, 0.0, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Lsefc, SecondOrderLaw) {
  EXPECT_EQ(lsefc_second_order(0.0, 0.0, 0.0, 0.0, 4.0, 4.0, 1.0), 0.0);
  EXPECT_EQ(lsefc_second_order(1.0, 0.0, 0.0, 0.0, 4.0, 4.0, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(lsefc_second_order(1.0, 0.25, 0.5, 0.3, 16.0, 8.0, 2.0),
                   (16.0 * 0.75 - 8.0 * 0.5 - 0.3) / 2.0);
  EXPECT_THROW(lsefc_second_order(1.0, 0, 0, 0, 1, 1, 0.0), std::invalid_argument);
}

// Plant y'' = a1 y' + a0 y + d + b u with a0 = 1, a1 = -1, d = sin(t), closed by
// a second-order LESO and LSEFC. The observer runs at ten times the loop bandwidth.
TEST(LadrcLoop, SecondOrderPlantTracksStepUnderSinusoidalDisturbance) {
  const double dt = 0.001;
  LesoConfig c;
  c.order = 2;
  c.b0 = 1.0;
  c.omega_o = 40.0;
  c.dt = dt;
  Leso leso(c);
  const double wc = 4.0, kp = wc * wc, kd = 2 * wc;
  double y = 0.0, yd = 0.0, u = 0.0;
  double max_err_late = 0.0;
  for (int k = 0; k < 20000; ++k) {
    const double t = k * dt;
    leso.update(u, y);
    const Eigen::VectorXd& z = leso.estimate();
    u = lsefc_second_order(1.0, z[0], z[1], z[2], kp, kd, c.b0);
    const double ydd = -1.0 * yd + 1.0 * y + std::sin(t) + 1.0 * u;
    y += dt * yd;
    yd += dt * ydd;
    if (t > 10.0) max_err_late = std::max(max_err_late, std::abs(1.0 - y));
  }
  EXPECT_LT(max_err_late, 0.02);
}

}  // namespace
