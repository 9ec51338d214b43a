#include "dualsim/dualsim.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "dualsim/campaign.hpp"
#include "dualsim/config.hpp"
#include "dualsim/detection_log.hpp"
#include "dualsim/errors.hpp"
#include "dualsim/replay.hpp"
#include "dualsim/report.hpp"
#include "dualsim/stats.hpp"

struct dsim_config {
  dualsim::SimConfig value;
};

struct dsim_campaign {
  dualsim::CampaignResult value;
};

struct dsim_gate {
  dualsim::CameraModel camera;
  dualsim::GateState state;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_key;

dsim_status fail(dsim_status status, std::string message, std::string key = {}) {
  g_error = std::move(message);
  g_error_key = std::move(key);
  return status;
}

// Runs `fn`, mapping exceptions to status codes.
template <class Fn>
dsim_status guarded(Fn&& fn) {
  g_error.clear();
  g_error_key.clear();
  try {
    return fn();
  } catch (const dualsim::ConfigError& e) {
    return fail(DSIM_ERR_CONFIG, e.what(), e.key());
  } catch (const dualsim::LogFormatError& e) {
    return fail(DSIM_ERR_PARSE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DSIM_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DSIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(DSIM_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(DSIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DSIM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool to_mode(dsim_mode m, dualsim::ControllerMode& out) {
  switch (m) {
    case DSIM_MODE_NEAR_ONLY: out = dualsim::ControllerMode::NearOnly; return true;
    case DSIM_MODE_FAR_ONLY: out = dualsim::ControllerMode::FarOnly; return true;
    case DSIM_MODE_DUAL: out = dualsim::ControllerMode::Dual; return true;
  }
  return false;
}

dualsim::Detection to_detection(const dsim_detection* d, dualsim::ExpertId id) {
  if (!d || !d->present) return dualsim::Detection::absent(id);
  if (!(d->box.w > 0.0) || !(d->box.h > 0.0)) {
    throw std::invalid_argument("detection box needs positive width and height");
  }
  return {id, dualsim::BoundingBox{d->box.u, d->box.v, d->box.w, d->box.h}, d->confidence};
}

}  // namespace

extern "C" {

const char* dsim_version(void) { return "1.0.0"; }
const char* dsim_last_error(void) { return g_error.c_str(); }
const char* dsim_last_error_key(void) { return g_error_key.c_str(); }
void dsim_string_free(char* s) { std::free(s); }

dsim_status dsim_config_default(dsim_config** out) {
  return guarded([&] {
    if (!out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = new dsim_config{};
    return DSIM_OK;
  });
}

dsim_status dsim_config_load(const char* path, dsim_config** out) {
  return guarded([&] {
    if (!path || !out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    std::ifstream in(path);
    if (!in) return fail(DSIM_ERR_IO, std::string("cannot open config '") + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    *out = new dsim_config{dualsim::parse_config(text.str())};
    return DSIM_OK;
  });
}

dsim_status dsim_config_parse(const char* json_text, dsim_config** out) {
  return guarded([&] {
    if (!json_text || !out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    *out = new dsim_config{dualsim::parse_config(json_text)};
    return DSIM_OK;
  });
}

void dsim_config_free(dsim_config* config) { delete config; }

dsim_status dsim_config_validate(const dsim_config* config) {
  return guarded([&] {
    if (!config) return fail(DSIM_ERR_INVALID_ARGUMENT, "null config");
    config->value.validate();
    return DSIM_OK;
  });
}

dsim_status dsim_config_set_seed(dsim_config* config, uint64_t seed) {
  return guarded([&] {
    if (!config) return fail(DSIM_ERR_INVALID_ARGUMENT, "null config");
    config->value.trial.seed = seed;
    return DSIM_OK;
  });
}

dsim_status dsim_config_set_trials(dsim_config* config, int trials) {
  return guarded([&] {
    if (!config) return fail(DSIM_ERR_INVALID_ARGUMENT, "null config");
    if (trials < 1) return fail(DSIM_ERR_CONFIG, "campaign.trials: must be at least 1", "campaign.trials");
    config->value.trial.trials = trials;
    return DSIM_OK;
  });
}

dsim_status dsim_config_set_modes(dsim_config* config, unsigned mode_mask) {
  return guarded([&] {
    if (!config) return fail(DSIM_ERR_INVALID_ARGUMENT, "null config");
    if (mode_mask == 0 || (mode_mask & ~7u) != 0) {
      return fail(DSIM_ERR_INVALID_ARGUMENT, "mode mask must combine DSIM_MODE_* bits");
    }
    auto& modes = config->value.trial.modes;
    modes.clear();
    if (mode_mask & DSIM_MODE_NEAR_ONLY) modes.push_back(dualsim::ControllerMode::NearOnly);
    if (mode_mask & DSIM_MODE_FAR_ONLY) modes.push_back(dualsim::ControllerMode::FarOnly);
    if (mode_mask & DSIM_MODE_DUAL) modes.push_back(dualsim::ControllerMode::Dual);
    return DSIM_OK;
  });
}

dsim_status dsim_config_to_json(const dsim_config* config, char** out_json) {
  return guarded([&] {
    if (!config || !out_json) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    *out_json = dup_string(dualsim::config_to_json(config->value) + "\n");
    return DSIM_OK;
  });
}

dsim_status dsim_campaign_run(const dsim_config* config, unsigned jobs, int record_frames,
                              dsim_campaign** out) {
  return guarded([&] {
    if (!config || !out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    *out = new dsim_campaign{dualsim::run_campaign(config->value, jobs, record_frames != 0)};
    return DSIM_OK;
  });
}

void dsim_campaign_free(dsim_campaign* campaign) { delete campaign; }

dsim_status dsim_campaign_write(const dsim_campaign* campaign, const char* out_dir) {
  return guarded([&] {
    if (!campaign || !out_dir) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    dualsim::write_campaign(campaign->value, out_dir);
    return DSIM_OK;
  });
}

dsim_status dsim_campaign_summary_json(const dsim_campaign* campaign, char** out_json) {
  return guarded([&] {
    if (!campaign || !out_json) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    const auto report = dualsim::compare_modes(campaign->value.modes);
    *out_json = dup_string(dualsim::summary_json(campaign->value, report));
    return DSIM_OK;
  });
}

dsim_status dsim_campaign_report_text(const dsim_campaign* campaign, char** out_text) {
  return guarded([&] {
    if (!campaign || !out_text) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    *out_text = dup_string(dualsim::render_table(dualsim::compare_modes(campaign->value.modes)));
    return DSIM_OK;
  });
}

size_t dsim_campaign_trial_count(const dsim_campaign* campaign, dsim_mode mode) {
  dualsim::ControllerMode m;
  if (!campaign || !to_mode(mode, m)) return 0;
  const auto* results = campaign->value.find(m);
  return results ? results->trials.size() : 0;
}

dsim_status dsim_campaign_trial(const dsim_campaign* campaign, dsim_mode mode, size_t index,
                                dsim_trial_result* out) {
  return guarded([&] {
    dualsim::ControllerMode m;
    if (!campaign || !out || !to_mode(mode, m)) {
      return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument or unknown mode");
    }
    const auto* results = campaign->value.find(m);
    if (!results) return fail(DSIM_ERR_OUT_OF_RANGE, "mode was not run");
    if (index >= results->trials.size()) return fail(DSIM_ERR_OUT_OF_RANGE, "trial index out of range");
    const auto& t = results->trials[index];
    out->trial_id = t.trial_id;
    out->initial_position[0] = t.initial_position.x;
    out->initial_position[1] = t.initial_position.y;
    out->initial_position[2] = t.initial_position.z;
    out->touchdown_xy[0] = t.touchdown_x;
    out->touchdown_xy[1] = t.touchdown_y;
    out->touchdown_error = t.touchdown_error;
    out->success = t.success ? 1 : 0;
    out->termination = static_cast<dsim_termination>(t.termination);
    out->steps = t.steps;
    out->far_selections = t.far_selections;
    out->near_selections = t.near_selections;
    return DSIM_OK;
  });
}

dsim_status dsim_gate_create(const dsim_config* config, dsim_gate** out) {
  return guarded([&] {
    if (!out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null output pointer");
    const dualsim::SimConfig defaults;
    const auto& cfg = config ? config->value : defaults;
    cfg.camera.validate();
    cfg.gate.validate();
    *out = new dsim_gate{cfg.camera, dualsim::GateState(cfg.gate)};
    return DSIM_OK;
  });
}

void dsim_gate_free(dsim_gate* gate) { delete gate; }

dsim_status dsim_gate_update(dsim_gate* gate, const dsim_detection* far, const dsim_detection* near,
                             dsim_gate_output* out) {
  return guarded([&] {
    if (!gate || !out) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    const auto result =
        dualsim::select_expert(to_detection(far, dualsim::ExpertId::Far),
                               to_detection(near, dualsim::ExpertId::Near), gate->state, gate->camera);
    *out = dsim_gate_output{};
    out->has_smoothed_box = result.smoothed_box ? 1 : 0;
    if (result.smoothed_box) {
      const auto& b = *result.smoothed_box;
      out->smoothed_box = {b.u, b.v, b.w, b.h};
    }
    out->selected = !result.selected_expert ? DSIM_EXPERT_NONE
                    : *result.selected_expert == dualsim::ExpertId::Far ? DSIM_EXPERT_FAR
                                                                       : DSIM_EXPERT_NEAR;
    out->raw_distance = result.raw_distance.value_or(0.0);
    out->tracking_lost = result.tracking_lost ? 1 : 0;
    return DSIM_OK;
  });
}

dsim_status dsim_replay(const dsim_config* config, const char* log_path, const char* out_csv_path) {
  return guarded([&] {
    if (!config || !log_path || !out_csv_path) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    config->value.validate();
    std::ifstream in(log_path);
    if (!in) return fail(DSIM_ERR_IO, std::string("cannot open detection log '") + log_path + "'");
    const auto log = dualsim::DetectionLog::parse(in);
    const auto frames = dualsim::replay_log(log, config->value);
    std::ostringstream text;
    dualsim::write_replay_csv(text, frames);
    std::ofstream out(out_csv_path, std::ios::binary);
    if (!out) return fail(DSIM_ERR_IO, std::string("cannot write '") + out_csv_path + "'");
    out << text.str();
    if (!out) return fail(DSIM_ERR_IO, std::string("write failed for '") + out_csv_path + "'");
    return DSIM_OK;
  });
}

dsim_status dsim_report_from_summary(const char* summary_path, char** out_text) {
  return guarded([&] {
    if (!summary_path || !out_text) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    std::ifstream in(summary_path);
    if (!in) return fail(DSIM_ERR_IO, std::string("cannot open summary '") + summary_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    *out_text = dup_string(dualsim::render_table(dualsim::report_from_summary_json(text.str())));
    return DSIM_OK;
  });
}

dsim_status dsim_wilcoxon(const double* a, const double* b, size_t n, dsim_wilcoxon_result* out) {
  return guarded([&] {
    if (!out || (n > 0 && (!a || !b))) return fail(DSIM_ERR_INVALID_ARGUMENT, "null argument");
    const auto r = dualsim::wilcoxon_signed_rank({a, n}, {b, n});
    *out = {r.n_effective, r.w_plus, r.w_minus, r.statistic, r.p_two_sided, r.degenerate ? 1 : 0};
    return DSIM_OK;
  });
}

}  // extern "C"
