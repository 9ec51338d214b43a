#include "dualsim/trial.hpp"

#include <cmath>

#include "dualsim/dynamics.hpp"
#include "dualsim/servo.hpp"

namespace dualsim {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Landed: return "LANDED";
    case Termination::TrackingLost: return "TRACKING_LOST";
    case Termination::Timeout: return "TIMEOUT";
  }
  return "?";
}

VehicleState sample_initial(const TrialConfig& config, int index, Rng& rng) {
  VehicleState s;
  s.position.x = rng.uniform(config.x_range.lo, config.x_range.hi);
  s.position.y = rng.uniform(config.y_range.lo, config.y_range.hi);
  const auto n_alt = config.altitudes.size();
  const double u = rng.uniform();
  if (index >= 0 && static_cast<std::size_t>(index) < n_alt) {
    s.position.z = config.altitudes[static_cast<std::size_t>(index)];
  } else {
    const auto pick = std::min(static_cast<std::size_t>(u * static_cast<double>(n_alt)), n_alt - 1);
    s.position.z = config.altitudes[pick];
  }
  return s;
}

std::vector<InitialCondition> sample_initial_conditions(const TrialConfig& config, int n) {
  Rng rng(derive_seed(config.seed, 0));
  std::vector<InitialCondition> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    InitialCondition ic;
    ic.state = sample_initial(config, i, rng);
    ic.noise_seed = derive_seed(config.seed, 1 + static_cast<std::uint64_t>(i));
    out.push_back(ic);
  }
  return out;
}

std::uint64_t expert_stream_seed(std::uint64_t noise_seed, ExpertId expert) {
  return derive_seed(noise_seed, expert == ExpertId::Far ? 1 : 2);
}

namespace {

double planar_error(double x, double y, const HelipadSpec& pad) {
  return std::hypot(x - pad.x, y - pad.y);
}

}  // namespace

TrialResult run_trial(const SimConfig& config, ControllerMode mode, const InitialCondition& start,
                      int trial_id, bool record_frames) {
  const bool use_far = mode != ControllerMode::NearOnly;
  const bool use_near = mode != ControllerMode::FarOnly;

  Rng far_rng(expert_stream_seed(start.noise_seed, ExpertId::Far));
  Rng near_rng(expert_stream_seed(start.noise_seed, ExpertId::Near));
  GateState gate(config.gate);
  VehicleState state = start.state;

  TrialResult result;
  result.trial_id = trial_id;
  result.mode = mode;
  result.initial_position = start.state.position;

  const auto finish = [&](Termination why, int steps) {
    result.termination = why;
    result.success = why == Termination::Landed;
    result.steps = steps;
    result.touchdown_x = state.position.x;
    result.touchdown_y = state.position.y;
    result.touchdown_error = planar_error(state.position.x, state.position.y, config.helipad);
  };

  const auto run_expert = [&](const ExpertProfile& profile, Rng& rng,
                              const std::optional<BoundingBox>& truth, double s, double ppm) {
    if (!truth) {
      rng.discard_uniforms(kDetectDraws);
      return Detection::absent(profile.expert);
    }
    return detect(profile, *truth, s, ppm, config.camera, rng);
  };

  if (state.position.z <= config.trial.commit_altitude) {
    finish(Termination::Landed, 0);
    return result;
  }

  for (int k = 0; k < config.trial.max_steps; ++k) {
    FrameRecord frame;
    frame.step = k;
    frame.t = k * config.dynamics.dt;
    frame.position = state.position;

    const auto truth = project_helipad(state, config.helipad, config.camera);
    const double s = apparent_width(state, config.helipad, config.camera);
    const double ppm = config.camera.focal_length / state.position.z;
    if (use_far) frame.far = run_expert(config.far, far_rng, truth, s, ppm);
    if (use_near) frame.near = run_expert(config.near, near_rng, truth, s, ppm);

    frame.gate = select_expert(frame.far, frame.near, gate, config.camera);
    if (frame.gate.selected_expert == ExpertId::Far) ++result.far_selections;
    if (frame.gate.selected_expert == ExpertId::Near) ++result.near_selections;

    if (frame.gate.smoothed_box) {
      frame.errors = compute_errors(*frame.gate.smoothed_box, config.camera, config.gains);
      frame.command = compute_command(*frame.errors, config.gains);
    }
    if (record_frames) result.frames.push_back(frame);

    // Lost track: lateral position freezes and the vehicle sinks blind.
    if (frame.gate.tracking_lost) {
      finish(Termination::TrackingLost, k + 1);
      return result;
    }

    state = step(state, frame.command, config.dynamics);
    if (state.position.z <= config.trial.commit_altitude) {
      finish(Termination::Landed, k + 1);
      return result;
    }
  }
  finish(Termination::Timeout, config.trial.max_steps);
  return result;
}

}  // namespace dualsim
