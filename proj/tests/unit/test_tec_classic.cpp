#include <gtest/gtest.h>

#include <cmath>

#include "tecsim/tec_classic.hpp"

namespace {

using namespace tecsim;

constexpr double kThrustTrim = 19.5;
constexpr double kThetaTrim = 0.0035;

TecClassicGains spec_gains() { return TecClassicGains::defaults_for(AirframeParams::aerosonde()); }

TEST(TecClassic, DefaultGainsScaleWithWeight) {
  const TecClassicGains g = spec_gains();
  const double mg = 13.5 * 9.81;
  EXPECT_NEAR(g.k_Ep, 0.5 * mg, 1e-12);
  EXPECT_NEAR(g.k_Ei, 0.1 * mg, 1e-12);
  EXPECT_EQ(g.k_Bp, 1.0);
  EXPECT_EQ(g.k_Bi, 0.2);
}

TEST(TecClassic, EquilibriumReturnsTrim) {
  TecClassic tec(spec_gains(), kThrustTrim, kThetaTrim);
  for (int k = 0; k < 500; ++k) {
    const TecClassicCommand c = tec.update(0.0, 0.0, 0.0, 0.0, 0.01);
    ASSERT_EQ(c.thrust, kThrustTrim);
    ASSERT_EQ(c.theta, kThetaTrim);
  }
}

TEST(TecClassic, ProportionalPathAtFirstSample) {
  TecClassicGains g = spec_gains();
  g.k_Ep = 13.5 * 9.81;
  TecClassic tec(g, kThrustTrim, kThetaTrim);
  // Measured E_dot = 0.1 with matching demand: only the proportional term acts.
  const TecClassicCommand c = tec.update(0.1, 0.05, 0.1, 0.05, 0.01);
  EXPECT_NEAR(c.thrust, kThrustTrim - 13.5 * 9.81 * 0.1, 1e-12);
  EXPECT_NEAR(c.theta, kThetaTrim - g.k_Bp * 0.05, 1e-15);
}

TEST(TecClassic, IntegralsGrowLinearlyUnderConstantError) {
  const TecClassicGains g = spec_gains();
  TecClassic tec(g, kThrustTrim, kThetaTrim);
  const double cE = 0.02, cB = -0.01, dt = 0.01;
  TecClassicCommand c;
  for (int k = 0; k < 100; ++k) c = tec.update(0.0, 0.0, cE, cB, dt);
  EXPECT_NEAR(tec.thrust_integral(), g.k_Ei * cE * 1.0, 1e-12);
  EXPECT_NEAR(c.thrust, kThrustTrim + g.k_Ei * cE, 1e-12);
  EXPECT_NEAR(c.theta, kThetaTrim + g.k_Bi * cB, 1e-12);
}

TEST(TecClassic, AntiWindupHoldsIntegralAtThrustLimit) {
  const TecClassicGains g = spec_gains();
  TecClassic tec(g, kThrustTrim, kThetaTrim);
  const ThrustLimits limits{0.0, 25.0};
  const double inc = g.k_Ei * 0.5 * 0.01;
  TecClassicCommand c;
  for (int k = 0; k < 2000; ++k) c = tec.update(0.0, 0.0, 0.5, 0.0, 0.01, limits);
  // Integration stops one increment short of the limit and stays there.
  const double held = tec.thrust_integral();
  EXPECT_LE(kThrustTrim + held, 25.0);
  EXPECT_GT(kThrustTrim + held, 25.0 - inc);
  c = tec.update(0.0, 0.0, 0.5, 0.0, 0.01, limits);
  EXPECT_EQ(tec.thrust_integral(), held);
  EXPECT_LE(c.thrust, 25.0);
  // Reversing the demand leaves saturation on the first sample.
  c = tec.update(0.0, 0.0, -0.5, 0.0, 0.01, limits);
  EXPECT_LT(c.thrust, 25.0);
}

TEST(TecClassic, WithoutAntiWindupIntegralKeepsGrowing) {
  TecClassicGains g = spec_gains();
  g.anti_windup = false;
  TecClassic tec(g, kThrustTrim, kThetaTrim);
  for (int k = 0; k < 2000; ++k) tec.update(0.0, 0.0, 0.5, 0.0, 0.01, ThrustLimits{0.0, 25.0});
  EXPECT_NEAR(tec.thrust_integral(), g.k_Ei * 0.5 * 20.0, 1e-9);
}

TEST(TecClassic, PitchCommandIsLimited) {
  const TecClassicGains g = spec_gains();
  TecClassic tec(g, kThrustTrim, kThetaTrim);
  const TecClassicCommand c = tec.update(0.0, -10.0, 0.0, 0.0, 0.01);
  EXPECT_EQ(c.theta, g.theta_max);
  EXPECT_TRUE(c.theta_saturated);
}

TEST(TecClassic, ResetRestoresTrim) {
  TecClassic tec(spec_gains(), kThrustTrim, kThetaTrim);
  for (int k = 0; k < 50; ++k) tec.update(0.0, 0.0, 0.1, 0.1, 0.01);
  tec.reset();
  EXPECT_EQ(tec.thrust_integral(), 0.0);
  EXPECT_EQ(tec.pitch_integral(), kThetaTrim);
}

}  // namespace
