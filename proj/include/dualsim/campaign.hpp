#pragma once

#include <vector>

#include "dualsim/config.hpp"
#include "dualsim/trial.hpp"

namespace dualsim {

struct ModeResults {
  ControllerMode mode = ControllerMode::Dual;
  std::vector<TrialResult> trials;  // indexed by trial id
};

struct CampaignResult {
  SimConfig config;
  std::vector<InitialCondition> initial;
  std::vector<ModeResults> modes;  // in config.trial.modes order

  const ModeResults* find(ControllerMode mode) const;
};

/// Relative path of a trial's trajectory CSV inside an output directory.
std::string trajectory_file_name(ControllerMode mode, int trial_id);
/// Relative path of a trial's detection log inside an output directory.
std::string detection_log_file_name(ControllerMode mode, int trial_id);

/// Runs config.trial.trials paired trials for every mode in
/// config.trial.modes. All modes share one list of initial conditions and the
/// same per-trial noise seeds. Trials run on up to `jobs` threads; results do
/// not depend on the thread count. Validates the config first.
CampaignResult run_campaign(const SimConfig& config, unsigned jobs = 1,
                            bool record_frames = false);

}  // namespace dualsim
