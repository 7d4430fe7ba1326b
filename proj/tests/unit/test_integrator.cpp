#include <gtest/gtest.h>

#include <cmath>

#include "tecsim/integrator.hpp"

namespace {

using tecsim::rk4_step;

std::array<double, 1> decay(double, const std::array<double, 1>& x) { return {-x[0]}; }

double integrate_decay(double dt, double T) {
  std::array<double, 1> x{1.0};
  const int n = static_cast<int>(std::lround(T / dt));
  for (int k = 0; k < n; ++k) x = rk4_step(decay, k * dt, x, dt);
  return x[0];
}

TEST(Rk4, SingleStepMatchesTaylorPolynomial) {
  // For x' = -x one RK4 step is the degree-4 Taylor polynomial of exp(-h).
  const double h = 0.1;
  const double taylor = 1 - h + h * h / 2 - h * h * h / 6 + h * h * h * h / 24;
  EXPECT_NEAR(rk4_step(decay, 0.0, std::array<double, 1>{1.0}, h)[0], taylor, 1e-15);
}

TEST(Rk4, ExponentialDecayOrderIsFour) {
  const double exact = std::exp(-2.0);
  double prev = std::abs(integrate_decay(0.2, 2.0) - exact);
  for (double dt : {0.1, 0.05, 0.025}) {
    const double err = std::abs(integrate_decay(dt, 2.0) - exact);
    EXPECT_GE(std::log2(prev / err), 3.8) << "dt=" << dt;
    prev = err;
  }
}

TEST(Rk4, HarmonicOscillatorConservesEnergyClosely) {
  auto f = [](double, const std::array<double, 2>& x) { return std::array<double, 2>{x[1], -x[0]}; };
  std::array<double, 2> x{1.0, 0.0};
  const double dt = 0.01;
  for (int k = 0; k < 628; ++k) x = rk4_step(f, k * dt, x, dt);
  EXPECT_NEAR(x[0], std::cos(6.28), 1e-9);
  EXPECT_NEAR(x[1], -std::sin(6.28), 1e-9);
}

TEST(Rk4, TimeDependentRightHandSide) {
  // x' = cos(t), x(0) = 0 -> sin(t). RK4 reduces to Simpson's rule here.
  auto f = [](double t, const std::array<double, 1>&) { return std::array<double, 1>{std::cos(t)}; };
  std::array<double, 1> x{0.0};
  const double dt = 0.05;
  for (int k = 0; k < 40; ++k) x = rk4_step(f, k * dt, x, dt);
  EXPECT_NEAR(x[0], std::sin(2.0), 1e-8);
}

}  // namespace
