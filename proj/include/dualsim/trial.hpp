#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualsim/config.hpp"
#include "dualsim/gating.hpp"

namespace dualsim {

enum class Termination { Landed, TrackingLost, Timeout };

std::string_view to_string(Termination t);

/// Start of one paired trial: the initial state and the seed of its detector
/// noise streams, shared by every controller mode.
struct InitialCondition {
  VehicleState state;
  std::uint64_t noise_seed = 0;
};

/// One closed-loop frame as logged to the trajectory CSV.
struct FrameRecord {
  int step = 0;
  double t = 0.0;
  Vec3 position;
  Detection far = Detection::absent(ExpertId::Far);
  Detection near = Detection::absent(ExpertId::Near);
  GateOutput gate;
  std::optional<ErrorSignals> errors;
  VelocityCommand command;
};

struct TrialResult {
  int trial_id = 0;
  ControllerMode mode = ControllerMode::Dual;
  Vec3 initial_position;
  double touchdown_x = 0.0;
  double touchdown_y = 0.0;
  double touchdown_error = 0.0;
  bool success = false;
  Termination termination = Termination::Timeout;
  int steps = 0;
  int far_selections = 0;
  int near_selections = 0;
  std::string trajectory_log_path;
  std::vector<FrameRecord> frames;  // empty unless recording was requested
};

/// Initial state of trial `index`: uniform lateral position, altitude taken
/// round-robin from the set for the first |set| trials and uniformly after.
/// Always consumes three draws.
VehicleState sample_initial(const TrialConfig& config, int index, Rng& rng);

/// The shared list of n paired initial conditions for a campaign seed.
std::vector<InitialCondition> sample_initial_conditions(const TrialConfig& config, int n);

/// Seeds of the FAR and NEAR detector streams for one trial.
std::uint64_t expert_stream_seed(std::uint64_t noise_seed, ExpertId expert);

/// Runs the closed loop until commit (LANDED), loss of track or timeout.
/// Frame order: project, detect, gate and smooth, servo, dynamics step.
TrialResult run_trial(const SimConfig& config, ControllerMode mode, const InitialCondition& start,
                      int trial_id, bool record_frames = false);

}  // namespace dualsim
