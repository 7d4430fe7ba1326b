#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "tecsim/config.hpp"
#include "tecsim/errors.hpp"

namespace {

using namespace tecsim;

const std::filesystem::path kConfigDir{TECSIM_CONFIG_DIR};

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in, kConfigDir);
}

std::string error_key(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

TEST(RunConfig, DefaultsAreValid) {
  const RunConfig c = default_run_config();
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.scenario.cruise_airspeed, 35.0);
  EXPECT_EQ(c.scenario.dt, 0.01);
  EXPECT_EQ(c.scenario.controller, ControllerKind::ladrc_tec);
  EXPECT_NEAR(c.controller.tec.k_Ep, 0.5 * 13.5 * 9.81, 1e-12);
  EXPECT_EQ(c.controller.guidance.k_h, 0.3);
  EXPECT_EQ(c.controller.guidance.k_V, 0.5);
  EXPECT_EQ(c.turbulence.dryden.sigma_u, 1.06);
  EXPECT_EQ(c.turbulence.dryden.L_w, 50.0);
}

TEST(RunConfig, ParsesEverySection) {
  const RunConfig c = parse(
      "[scenario]\nname = x\nkind = altitude_step\nstep = -5\nduration = 12\nseed = 7\n"
      "controller = tec_classic\n"
      "[turbulence]\nonset = 1.5\nsigma_u = 2\n"
      "[controller.tec]\nk_Bp = 0.7\nanti_windup = false\n"
      "[controller.ladrc]\nk_E = 2\nomega_o = 8\ndisturbance_feedforward = false\n"
      "[guidance]\nk_h = 0.4\nrate_source = difference\n"
      "[inner_loop]\nk_p_theta = 3\n"
      "[airframe]\nparams_file = aerosonde.ini\nm = 14\n");
  EXPECT_EQ(c.scenario.name, "x");
  EXPECT_EQ(c.scenario.kind, ScenarioKind::altitude_step);
  EXPECT_EQ(c.scenario.step, -5.0);
  EXPECT_EQ(c.scenario.seed, 7u);
  EXPECT_EQ(c.scenario.controller, ControllerKind::tec_classic);
  EXPECT_EQ(c.turbulence.onset, 1.5);
  EXPECT_EQ(c.turbulence.dryden.sigma_u, 2.0);
  EXPECT_EQ(c.controller.tec.k_Bp, 0.7);
  EXPECT_FALSE(c.controller.tec.anti_windup);
  EXPECT_EQ(c.controller.ladrc.k_E, 2.0);
  EXPECT_EQ(c.controller.ladrc.omega_o, 8.0);
  EXPECT_FALSE(c.controller.ladrc.disturbance_feedforward);
  EXPECT_EQ(c.controller.guidance.k_h, 0.4);
  EXPECT_EQ(c.controller.rate_source, RateSource::difference);
  EXPECT_EQ(c.controller.pitch.k_p, 3.0);
  EXPECT_EQ(c.airframe.m, 14.0);
  // Classical defaults follow the loaded airframe weight.
  EXPECT_NEAR(c.controller.tec.k_Ep, 0.5 * 14.0 * 9.81, 1e-12);
}

TEST(RunConfig, ShippedScenarioFilesLoad) {
  for (const char* name : {"altitude_step", "airspeed_step", "turbulence", "hold"}) {
    const RunConfig c = load_run_config(kConfigDir / (std::string(name) + ".ini"));
    EXPECT_EQ(c.scenario.name, name);
  }
  const RunConfig t = load_run_config(kConfigDir / "turbulence.ini");
  EXPECT_EQ(t.scenario.kind, ScenarioKind::turbulence_onset);
  EXPECT_GE(t.scenario.seeds, 10);
}

TEST(RunConfig, UnknownKeysAndSectionsAreNamed) {
  EXPECT_EQ(error_key("[scenario]\nstepp = 3\n"), "stepp");
  EXPECT_EQ(error_key("[controler.tec]\nk_Ep = 1\n"), "controler.tec");
  EXPECT_EQ(error_key("dt = 0.01\n"), "dt");
  EXPECT_EQ(error_key("[airframe]\nC_L_alpah = 3\n"), "C_L_alpah");
}

TEST(RunConfig, BadValuesAreNamed) {
  EXPECT_EQ(error_key("[scenario]\ndt = fast\n"), "dt");
  EXPECT_EQ(error_key("[scenario]\nkind = loop\n"), "kind");
  EXPECT_EQ(error_key("[scenario]\ncontroller = pid\n"), "controller");
  EXPECT_EQ(error_key("[scenario]\nkind = altitude_step\nstep = 0\n"), "step");
  EXPECT_EQ(error_key("[scenario]\nduration = 10.005\n"), "duration");
  EXPECT_EQ(error_key("[scenario]\nseeds = 0\n"), "seeds");
  EXPECT_EQ(error_key("[controller.ladrc]\nomega_o = 80\n"), "omega_o");
  EXPECT_EQ(error_key("[scenario]\nseed = -1\n"), "seed");
}

TEST(RunConfig, MissingParamsFileFails) {
  EXPECT_THROW(parse("[airframe]\nparams_file = nope.ini\n"), ConfigError);
  EXPECT_THROW(load_run_config(kConfigDir / "does_not_exist.ini"), ConfigError);
}

TEST(RunConfig, EnumNamesRoundTrip) {
  for (auto k : {ScenarioKind::hold, ScenarioKind::altitude_step, ScenarioKind::airspeed_step,
                 ScenarioKind::turbulence_onset}) {
    EXPECT_EQ(parse_scenario_kind(std::string(to_string(k))), k);
  }
  for (auto k : {ControllerKind::tec_classic, ControllerKind::ladrc_tec}) {
    EXPECT_EQ(parse_controller_kind(std::string(to_string(k))), k);
  }
}

}  // namespace
