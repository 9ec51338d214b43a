#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualsim/camera.hpp"
#include "dualsim/dynamics.hpp"
#include "dualsim/errors.hpp"
#include "dualsim/expert.hpp"
#include "dualsim/gating.hpp"
#include "dualsim/servo.hpp"

namespace dualsim {

enum class ControllerMode { NearOnly, FarOnly, Dual };

/// "NEAR_ONLY", "FAR_ONLY", "DUAL"
std::string_view to_string(ControllerMode mode);
/// Accepts the canonical names and the short CLI forms near/far/dual.
std::optional<ControllerMode> parse_mode(std::string_view text);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Randomized campaign layout and per-trial termination settings.
struct TrialConfig {
  Range x_range{-95.0, -65.0};
  Range y_range{60.0, 90.0};
  std::vector<double> altitudes{70.0, 80.0, 90.0, 110.0};
  std::uint64_t seed = 42;
  int trials = 10;
  int max_steps = 6000;
  double commit_altitude = 12.0;  // z_blind, m
  std::vector<ControllerMode> modes{ControllerMode::NearOnly, ControllerMode::FarOnly,
                                    ControllerMode::Dual};

  void validate() const;
};

/// Everything a campaign needs: scene, detectors, gate, controller, dynamics
/// and trial layout.
struct SimConfig {
  CameraModel camera;
  HelipadSpec helipad;
  ExpertProfile far = ExpertProfile::default_far();
  ExpertProfile near = ExpertProfile::default_near();
  GateParams gate;
  ControllerGains gains;
  DynamicsParams dynamics;
  TrialConfig trial;

  /// Height at which the pad's apparent area equals gains.area_ref.
  double reference_altitude() const;

  /// Throws ConfigError naming the first offending key.
  void validate() const;
};

/// Parses a JSON document (comments allowed). Missing keys keep their
/// defaults; unknown keys and type mismatches throw ConfigError. The result is
/// not validated.
SimConfig parse_config(std::string_view json_text);
SimConfig load_config(const std::string& path);

/// Canonical JSON form (strict JSON, no comments).
std::string config_to_json(const SimConfig& config, int indent = 2);

}  // namespace dualsim
