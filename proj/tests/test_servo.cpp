#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dualsim/servo.hpp"

using namespace dualsim;

TEST(Servo, ReferenceAreaDefault) {
  EXPECT_NEAR(ControllerGains::reference_area(CameraModel{}, HelipadSpec{}, 10.0), 72253.44, 1e-9);
  EXPECT_NEAR(ControllerGains{}.area_ref, 72253.44, 1e-9);
}

TEST(Servo, ErrorsCentered) {
  ControllerGains g;
  g.area_ref = 72253;
  const auto e = compute_errors({224, 224, 24, 24}, CameraModel{}, g);
  EXPECT_EQ(e.e_x, 0.0);
  EXPECT_EQ(e.e_y, 0.0);
  EXPECT_EQ(e.area, 576.0);
  EXPECT_EQ(e.e_z, 71677.0);
}

TEST(Servo, ErrorsPadRightOfCenter) {
  const auto e = compute_errors({243.2, 224, 38.4, 38.4}, CameraModel{}, ControllerGains{});
  EXPECT_NEAR(e.e_x, -19.2, 1e-12);
  EXPECT_EQ(e.e_y, 0.0);
}

TEST(Servo, ErrorsAtReferenceArea) {
  ControllerGains g;
  g.area_ref = 400.0;
  EXPECT_EQ(compute_errors({100, 100, 20, 20}, CameraModel{}, g).e_z, 0.0);
}

TEST(Servo, FullDescentWhenCenteredAndTiny) {
  const ControllerGains g;
  const auto cmd = compute_command({0, 0, 0, g.area_ref}, g);
  EXPECT_EQ(cmd.v_x, 0.0);
  EXPECT_EQ(cmd.v_y, 0.0);
  EXPECT_EQ(cmd.v_z, -g.k_z);
}

TEST(Servo, LateralCommandMovesTowardPad) {
  const auto cmd = compute_command({-19.2, 0, 1000, 0}, ControllerGains{});
  EXPECT_NEAR(cmd.v_x, 0.384, 1e-12);
  EXPECT_EQ(cmd.v_y, 0.0);
}

TEST(Servo, DescentGatedOnAlignment) {
  const ControllerGains g;
  const auto cmd = compute_command({40, 30, 0, g.area_ref}, g);  // 50 px off
  EXPECT_EQ(cmd.v_z, 0.0);
}

TEST(Servo, NoClimbOnOvershoot) {
  const ControllerGains g;
  EXPECT_EQ(compute_command({0, 0, 0, -5000}, g).v_z, 0.0);
}

TEST(ServoProperty, CommandBoundsHold) {
  const ControllerGains g;
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> px(-500, 500), area(-3e5, 3e5);
  for (int i = 0; i < 20000; ++i) {
    const auto cmd = compute_command({px(gen), px(gen), 0, area(gen)}, g);
    ASSERT_LE(std::abs(cmd.v_x), g.v_lat_max);
    ASSERT_LE(std::abs(cmd.v_y), g.v_lat_max);
    ASSERT_LE(cmd.v_z, 0.0);
    ASSERT_GE(cmd.v_z, -g.k_z);
  }
}
