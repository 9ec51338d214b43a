#include "dualsim/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace dualsim {

const ModeResults* CampaignResult::find(ControllerMode mode) const {
  for (const auto& m : modes) {
    if (m.mode == mode) return &m;
  }
  return nullptr;
}

namespace {

std::string mode_slug(ControllerMode mode) {
  switch (mode) {
    case ControllerMode::NearOnly: return "near_only";
    case ControllerMode::FarOnly: return "far_only";
    case ControllerMode::Dual: return "dual";
  }
  return "unknown";
}

std::string trial_suffix(int trial_id) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_trial_%03d.csv", trial_id);
  return buf;
}

}  // namespace

std::string trajectory_file_name(ControllerMode mode, int trial_id) {
  return "trajectories/" + mode_slug(mode) + trial_suffix(trial_id);
}

std::string detection_log_file_name(ControllerMode mode, int trial_id) {
  return "detections/" + mode_slug(mode) + trial_suffix(trial_id);
}

CampaignResult run_campaign(const SimConfig& config, unsigned jobs, bool record_frames) {
  config.validate();

  CampaignResult out;
  out.config = config;
  out.initial = sample_initial_conditions(config.trial, config.trial.trials);
  const std::size_t n_trials = out.initial.size();
  for (auto mode : config.trial.modes) {
    out.modes.push_back({mode, std::vector<TrialResult>(n_trials)});
  }

  const std::size_t n_tasks = out.modes.size() * n_trials;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      auto& slot = out.modes[task / n_trials];
      const auto trial = static_cast<int>(task % n_trials);
      try {
        auto result = run_trial(config, slot.mode, out.initial[static_cast<std::size_t>(trial)],
                                trial, record_frames);
        result.trajectory_log_path = trajectory_file_name(slot.mode, trial);
        slot.trials[static_cast<std::size_t>(trial)] = std::move(result);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::size_t>(jobs == 0 ? 1 : jobs, 1, std::max<std::size_t>(n_tasks, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace dualsim
