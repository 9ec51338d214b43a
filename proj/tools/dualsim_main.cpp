// dualsim: run landing campaigns, replay detection logs and print reports.
// Talks to the simulator exclusively through the C API in dualsim.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualsim/dualsim.h"

namespace {

struct ConfigDeleter {
  void operator()(dsim_config* c) const { dsim_config_free(c); }
};
struct CampaignDeleter {
  void operator()(dsim_campaign* c) const { dsim_campaign_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { dsim_string_free(s); }
};
using ConfigPtr = std::unique_ptr<dsim_config, ConfigDeleter>;
using CampaignPtr = std::unique_ptr<dsim_campaign, CampaignDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(const char* what, dsim_status status) {
  std::fprintf(stderr, "dualsim: %s: %s\n", what, dsim_last_error());
  return status == DSIM_ERR_CONFIG ? 2 : status == DSIM_ERR_IO ? 3 : 1;
}

std::optional<unsigned> parse_modes(const std::vector<std::string>& names) {
  unsigned mask = 0;
  for (const auto& n : names) {
    if (n == "near" || n == "NEAR_ONLY") {
      mask |= DSIM_MODE_NEAR_ONLY;
    } else if (n == "far" || n == "FAR_ONLY") {
      mask |= DSIM_MODE_FAR_ONLY;
    } else if (n == "dual" || n == "DUAL") {
      mask |= DSIM_MODE_DUAL;
    } else {
      return std::nullopt;
    }
  }
  return mask;
}

struct RunOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::vector<std::string> modes;
  unsigned jobs = 1;
};

int cmd_run(const RunOptions& opt) {
  dsim_config* raw = nullptr;
  if (auto st = dsim_config_load(opt.config.c_str(), &raw); st != DSIM_OK) {
    return report_error("loading config", st);
  }
  ConfigPtr config(raw);
  if (opt.seed) dsim_config_set_seed(config.get(), *opt.seed);
  if (opt.trials) {
    if (auto st = dsim_config_set_trials(config.get(), *opt.trials); st != DSIM_OK) {
      return report_error("--trials", st);
    }
  }
  if (!opt.modes.empty()) {
    const auto mask = parse_modes(opt.modes);
    if (!mask) {
      std::fprintf(stderr, "dualsim: --modes accepts near, far, dual\n");
      return 1;
    }
    dsim_config_set_modes(config.get(), *mask);
  }
  if (auto st = dsim_config_validate(config.get()); st != DSIM_OK) {
    return report_error("invalid config", st);
  }

  dsim_campaign* campaign_raw = nullptr;
  if (auto st = dsim_campaign_run(config.get(), opt.jobs, 1, &campaign_raw); st != DSIM_OK) {
    return report_error("campaign", st);
  }
  CampaignPtr campaign(campaign_raw);
  if (auto st = dsim_campaign_write(campaign.get(), opt.out.c_str()); st != DSIM_OK) {
    return report_error("writing results", st);
  }
  char* text = nullptr;
  if (auto st = dsim_campaign_report_text(campaign.get(), &text); st != DSIM_OK) {
    return report_error("report", st);
  }
  StringPtr owned(text);
  std::fputs(text, stdout);
  return 0;
}

int cmd_replay(const std::string& log, const std::string& config_path, const std::string& out) {
  dsim_config* raw = nullptr;
  if (auto st = dsim_config_load(config_path.c_str(), &raw); st != DSIM_OK) {
    return report_error("loading config", st);
  }
  ConfigPtr config(raw);
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) {
    std::fprintf(stderr, "dualsim: cannot create output directory '%s'\n", out.c_str());
    return 3;
  }
  const auto csv = (std::filesystem::path(out) / "replay.csv").string();
  if (auto st = dsim_replay(config.get(), log.c_str(), csv.c_str()); st != DSIM_OK) {
    return report_error("replay", st);
  }
  std::printf("wrote %s\n", csv.c_str());
  return 0;
}

int cmd_report(const std::string& summary) {
  auto path = std::filesystem::path(summary);
  if (std::filesystem::is_directory(path)) path /= "summary.json";
  char* text = nullptr;
  if (auto st = dsim_report_from_summary(path.string().c_str(), &text); st != DSIM_OK) {
    return report_error("report", st);
  }
  StringPtr owned(text);
  std::fputs(text, stdout);
  return 0;
}

int cmd_validate(const std::string& config_path) {
  dsim_config* raw = nullptr;
  if (auto st = dsim_config_load(config_path.c_str(), &raw); st != DSIM_OK) {
    return report_error("loading config", st);
  }
  ConfigPtr config(raw);
  if (auto st = dsim_config_validate(config.get()); st != DSIM_OK) {
    return report_error("invalid config", st);
  }
  std::printf("%s: ok\n", config_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-expert helipad landing simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dsim_version());

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a paired landing campaign");
  run_cmd->add_option("--config", run.config, "Campaign configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run_cmd->add_option("--out", run.out, "Output directory")->required();
  run_cmd->add_option("--seed", run.seed, "Override campaign seed");
  run_cmd->add_option("--trials", run.trials, "Override number of trials");
  run_cmd->add_option("--modes", run.modes, "Controller modes: near,far,dual")->delimiter(',');
  run_cmd->add_option("--jobs", run.jobs, "Worker threads (output does not depend on it)")
      ->check(CLI::Range(1u, 256u));

  std::string replay_log, replay_config, replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a detection log through the gate");
  replay_cmd->add_option("--log", replay_log, "DetectionLog CSV")->required();
  replay_cmd->add_option("--config", replay_config, "Campaign configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  replay_cmd->add_option("--out", replay_out, "Output directory")->required();

  std::string report_summary;
  auto* report_cmd = app.add_subcommand("report", "Print the comparison table of a summary");
  report_cmd->add_option("--summary", report_summary, "summary.json or a run output directory")
      ->required();

  std::string validate_config;
  auto* validate_cmd = app.add_subcommand("validate-config", "Check a configuration file");
  validate_cmd->add_option("--config", validate_config, "Campaign configuration (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (*run_cmd) return cmd_run(run);
  if (*replay_cmd) return cmd_replay(replay_log, replay_config, replay_out);
  if (*report_cmd) return cmd_report(report_summary);
  if (*validate_cmd) return cmd_validate(validate_config);
  return 1;
}
