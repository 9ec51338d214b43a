#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dualsim/campaign.hpp"
#include "dualsim/detection_log.hpp"
#include "dualsim/stats.hpp"

namespace dualsim {

struct ModeComparison {
  std::string mode_a;  // the dual-expert controller
  std::string mode_b;
  WilcoxonResult test;
  bool significant_05 = false;
  bool significant_01 = false;
};

struct ComparisonReport {
  std::vector<ErrorSummary> summaries;  // one per mode, input order
  std::vector<ModeComparison> comparisons;
};

/// Table-style summary per mode plus DUAL-vs-FAR_ONLY and DUAL-vs-NEAR_ONLY
/// signed-rank tests when those modes are present. Throws
/// std::invalid_argument if the mode lists are not paired trial by trial.
ComparisonReport compare_modes(std::span<const ModeResults> results);

/// Aligned plain-text table: model, mean error, std dev, success, then one
/// line per comparison.
std::string render_table(const ComparisonReport& report);

/// Campaign summary document: config echo, per-mode trial results, summaries
/// and comparisons.
std::string summary_json(const CampaignResult& campaign, const ComparisonReport& report);

/// Rebuilds the report section of a summary document.
ComparisonReport report_from_summary_json(const std::string& text);

inline constexpr std::string_view kTrajectoryCsvHeader =
    "step,t,x,y,z,u_far,v_far,far_present,u_near,v_near,near_present,selected,u_hat,v_hat,e_x,"
    "e_y,A,e_z,vx_cmd,vy_cmd,vz_cmd";

void write_trajectory_csv(std::ostream& out, const TrialResult& trial);

/// The detections a recorded trial saw, in DetectionLog form.
DetectionLog detection_log_of(const TrialResult& trial);

/// Writes summary.json, report.txt, and per-trial trajectory CSVs and
/// detection logs (when frames were recorded) under `out_dir`. Throws
/// std::runtime_error if anything cannot be written.
void write_campaign(const CampaignResult& campaign, const std::filesystem::path& out_dir);

/// Display name used in tables, e.g. "Dual-Expert".
std::string display_name(std::string_view mode);

}  // namespace dualsim
