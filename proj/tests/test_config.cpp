#include <gtest/gtest.h>

#include "dualsim/config.hpp"

using namespace dualsim;

namespace {

std::string key_of(const std::string& json) {
  try {
    parse_config(json).validate();
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

}  // namespace

TEST(Config, ShippedDefaultMatchesBuiltInDefaults) {
  const auto file = load_config(DUALSIM_DEFAULT_CONFIG);
  EXPECT_NO_THROW(file.validate());
  EXPECT_EQ(config_to_json(file), config_to_json(SimConfig{}));
}

TEST(Config, EmptyDocumentGivesDefaults) {
  EXPECT_EQ(config_to_json(parse_config("{}")), config_to_json(SimConfig{}));
}

TEST(Config, CanonicalJsonRoundTrips) {
  SimConfig cfg;
  cfg.trial.seed = 9;
  cfg.near.p_det_override = 0.5;
  cfg.trial.modes = {ControllerMode::Dual};
  const auto text = config_to_json(cfg);
  EXPECT_EQ(config_to_json(parse_config(text)), text);
}

TEST(Config, ZRefSetsReferenceArea) {
  const auto cfg = parse_config(R"({"gains": {"z_ref": 8}, "campaign": {"commit_altitude": 9}})");
  EXPECT_NEAR(cfg.gains.area_ref, 336.0 * 336.0, 1e-9);
  EXPECT_NEAR(cfg.reference_altitude(), 8.0, 1e-12);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, ErrorsNameTheKey) {
  EXPECT_EQ(key_of(R"({"gains": {"k_xy": -0.02}})"), "gains.k_xy");
  EXPECT_EQ(key_of(R"({"gains": {"k_xy": "fast"}})"), "gains.k_xy");
  EXPECT_EQ(key_of(R"({"gain": {}})"), "gain");
  EXPECT_EQ(key_of(R"({"experts": {"near": {"s_slope": 0}}})"), "experts.near.s_slope");
  EXPECT_EQ(key_of(R"({"experts": {"far": {"regime": "SOMETIMES"}}})"), "experts.far.regime");
  EXPECT_EQ(key_of(R"({"campaign": {"altitudes": []}})"), "campaign.altitudes");
  EXPECT_EQ(key_of(R"({"campaign": {"x_range": [1, 0]}})"), "campaign.x_range");
  EXPECT_EQ(key_of(R"({"campaign": {"modes": ["hover"]}})"), "campaign.modes");
  EXPECT_EQ(key_of(R"({"campaign": {"commit_altitude": 8}})"), "campaign.commit_altitude");
  EXPECT_EQ(key_of(R"({"gate": {"window": 0}})"), "gate.window");
  EXPECT_EQ(key_of(R"({"dynamics": {"dt": 0}})"), "dynamics.dt");
  EXPECT_EQ(key_of(R"({"camera": {"focal_length": -1}})"), "camera.focal_length");
  EXPECT_EQ(key_of(R"({"gains": {"z_ref": 10, "area_ref": 5}})"), "gains.area_ref");
  EXPECT_EQ(key_of("{not json"), "<document>");
}

TEST(Config, CommentsAreAccepted) {
  EXPECT_NO_THROW(parse_config("// header\n{ /* inline */ \"gate\": {\"window\": 3} }"));
}

TEST(Config, ModeNames) {
  EXPECT_EQ(parse_mode("dual"), ControllerMode::Dual);
  EXPECT_EQ(parse_mode("NEAR_ONLY"), ControllerMode::NearOnly);
  EXPECT_EQ(parse_mode("far"), ControllerMode::FarOnly);
  EXPECT_FALSE(parse_mode("both"));
}
