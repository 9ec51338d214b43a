#include "dualsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dualsim/csv.hpp"

namespace dualsim {

using nlohmann::ordered_json;

std::string display_name(std::string_view mode) {
  if (mode == "DUAL") return "Dual-Expert";
  if (mode == "NEAR_ONLY") return "Near-range Expert";
  if (mode == "FAR_ONLY") return "Far-range Expert";
  return std::string(mode);
}

ComparisonReport compare_modes(std::span<const ModeResults> results) {
  ComparisonReport report;
  if (results.empty()) return report;

  const auto& ref = results.front().trials;
  for (const auto& m : results) {
    if (m.trials.size() != ref.size()) {
      throw std::invalid_argument("compare_modes: modes ran different numbers of trials");
    }
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (m.trials[i].trial_id != ref[i].trial_id ||
          !(m.trials[i].initial_position == ref[i].initial_position)) {
        throw std::invalid_argument("compare_modes: trial " + std::to_string(i) +
                                    " is not paired across modes");
      }
    }
  }

  const auto errors_of = [](const ModeResults& m) {
    std::vector<double> e;
    for (const auto& t : m.trials) e.push_back(t.touchdown_error);
    return e;
  };

  for (const auto& m : results) {
    std::vector<bool> ok;
    for (const auto& t : m.trials) ok.push_back(t.success);
    const auto e = errors_of(m);
    report.summaries.push_back(summarize(e, ok, std::string(to_string(m.mode))));
  }

  const ModeResults* dual = nullptr;
  for (const auto& m : results) {
    if (m.mode == ControllerMode::Dual) dual = &m;
  }
  if (!dual) return report;
  const auto dual_errors = errors_of(*dual);
  for (auto other : {ControllerMode::FarOnly, ControllerMode::NearOnly}) {
    for (const auto& m : results) {
      if (m.mode != other) continue;
      ModeComparison c;
      c.mode_a = std::string(to_string(ControllerMode::Dual));
      c.mode_b = std::string(to_string(other));
      c.test = wilcoxon_signed_rank(dual_errors, errors_of(m));
      c.significant_05 = c.test.p_two_sided < 0.05;
      c.significant_01 = c.test.p_two_sided < 0.01;
      report.comparisons.push_back(c);
    }
  }
  return report;
}

std::string render_table(const ComparisonReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-20s %16s %14s %12s\n", "Model", "Mean Error (m)",
                "Std Dev (m)", "Success");
  out += line;
  out += std::string(65, '-') + '\n';
  // Dual first, then near, then far, then anything else.
  std::vector<const ErrorSummary*> rows;
  for (const char* key : {"DUAL", "NEAR_ONLY", "FAR_ONLY"}) {
    for (const auto& s : report.summaries) {
      if (s.mode == key) rows.push_back(&s);
    }
  }
  for (const auto& s : report.summaries) {
    if (s.mode != "DUAL" && s.mode != "NEAR_ONLY" && s.mode != "FAR_ONLY") rows.push_back(&s);
  }
  for (const auto* s : rows) {
    const auto landed = static_cast<long>(std::lround(s->success_rate * static_cast<double>(s->n)));
    char success[32];
    std::snprintf(success, sizeof success, "%ld/%zu", landed, s->n);
    std::snprintf(line, sizeof line, "%-20s %16.4f %14.4f %12s\n", display_name(s->mode).c_str(),
                  s->mean_error, s->std_error, success);
    out += line;
  }
  if (!report.comparisons.empty()) out += '\n';
  for (const auto& c : report.comparisons) {
    const char* verdict = c.significant_01   ? "significant at 0.01"
                          : c.significant_05 ? "significant at 0.05"
                                             : "not significant";
    std::snprintf(line, sizeof line, "%s vs. %s: W+ = %g, W- = %g, n = %zu, p = %.6g (%s)\n",
                  display_name(c.mode_a).c_str(), display_name(c.mode_b).c_str(), c.test.w_plus,
                  c.test.w_minus, c.test.n_effective, c.test.p_two_sided, verdict);
    out += line;
  }
  return out;
}

namespace {

ordered_json trial_json(const TrialResult& t) {
  ordered_json j;
  j["trial_id"] = t.trial_id;
  j["initial_position"] = {t.initial_position.x, t.initial_position.y, t.initial_position.z};
  j["touchdown_xy"] = {t.touchdown_x, t.touchdown_y};
  j["touchdown_error"] = t.touchdown_error;
  j["success"] = t.success;
  j["termination_reason"] = std::string(to_string(t.termination));
  j["steps"] = t.steps;
  j["expert_usage"] = {{"FAR", t.far_selections}, {"NEAR", t.near_selections}};
  j["trajectory_log_path"] = t.trajectory_log_path;
  return j;
}

}  // namespace

std::string summary_json(const CampaignResult& campaign, const ComparisonReport& report) {
  ordered_json j;
  j["config"] = ordered_json::parse(config_to_json(campaign.config));
  ordered_json initial = ordered_json::array();
  for (std::size_t i = 0; i < campaign.initial.size(); ++i) {
    const auto& p = campaign.initial[i].state.position;
    initial.push_back({{"trial_id", i}, {"position", {p.x, p.y, p.z}}});
  }
  j["initial_conditions"] = initial;
  ordered_json results = ordered_json::object();
  for (const auto& m : campaign.modes) {
    ordered_json list = ordered_json::array();
    for (const auto& t : m.trials) list.push_back(trial_json(t));
    results[std::string(to_string(m.mode))] = list;
  }
  j["results"] = results;
  ordered_json summaries = ordered_json::array();
  for (const auto& s : report.summaries) {
    summaries.push_back({{"mode", s.mode},
                         {"n", s.n},
                         {"mean_error", s.mean_error},
                         {"std_error", s.std_error},
                         {"success_rate", s.success_rate}});
  }
  j["summaries"] = summaries;
  ordered_json comparisons = ordered_json::array();
  for (const auto& c : report.comparisons) {
    comparisons.push_back({{"mode_a", c.mode_a},
                           {"mode_b", c.mode_b},
                           {"n_effective", c.test.n_effective},
                           {"w_plus", c.test.w_plus},
                           {"w_minus", c.test.w_minus},
                           {"statistic", c.test.statistic},
                           {"p_two_sided", c.test.p_two_sided},
                           {"degenerate", c.test.degenerate},
                           {"significant_0_05", c.significant_05},
                           {"significant_0_01", c.significant_01}});
  }
  j["comparisons"] = comparisons;
  return j.dump(2) + "\n";
}

ComparisonReport report_from_summary_json(const std::string& text) {
  ComparisonReport report;
  try {
    const auto j = ordered_json::parse(text);
    for (const auto& s : j.at("summaries")) {
      ErrorSummary e;
      e.mode = s.at("mode").get<std::string>();
      e.n = s.at("n").get<std::size_t>();
      e.mean_error = s.at("mean_error").get<double>();
      e.std_error = s.at("std_error").get<double>();
      e.success_rate = s.at("success_rate").get<double>();
      report.summaries.push_back(e);
    }
    for (const auto& c : j.at("comparisons")) {
      ModeComparison m;
      m.mode_a = c.at("mode_a").get<std::string>();
      m.mode_b = c.at("mode_b").get<std::string>();
      m.test.n_effective = c.at("n_effective").get<std::size_t>();
      m.test.w_plus = c.at("w_plus").get<double>();
      m.test.w_minus = c.at("w_minus").get<double>();
      m.test.statistic = c.at("statistic").get<double>();
      m.test.p_two_sided = c.at("p_two_sided").get<double>();
      m.test.degenerate = c.at("degenerate").get<bool>();
      m.significant_05 = c.at("significant_0_05").get<bool>();
      m.significant_01 = c.at("significant_0_01").get<bool>();
      report.comparisons.push_back(m);
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string("malformed summary: ") + e.what());
  }
  return report;
}

void write_trajectory_csv(std::ostream& out, const TrialResult& trial) {
  using csv::format_double;
  out << kTrajectoryCsvHeader << '\n';
  const auto det_fields = [&](const Detection& d) {
    if (d.box) {
      out << format_double(d.box->u) << ',' << format_double(d.box->v) << ",1,";
    } else {
      out << ",,0,";
    }
  };
  for (const auto& f : trial.frames) {
    out << f.step << ',' << format_double(f.t) << ',' << format_double(f.position.x) << ','
        << format_double(f.position.y) << ',' << format_double(f.position.z) << ',';
    det_fields(f.far);
    det_fields(f.near);
    out << (f.gate.selected_expert ? to_string(*f.gate.selected_expert) : "NONE") << ',';
    if (const auto& b = f.gate.smoothed_box) {
      out << format_double(b->u) << ',' << format_double(b->v) << ',';
    } else {
      out << ",,";
    }
    if (const auto& e = f.errors) {
      out << format_double(e->e_x) << ',' << format_double(e->e_y) << ','
          << format_double(e->area) << ',' << format_double(e->e_z) << ',';
    } else {
      out << ",,,,";
    }
    out << format_double(f.command.v_x) << ',' << format_double(f.command.v_y) << ','
        << format_double(f.command.v_z) << '\n';
  }
}

DetectionLog detection_log_of(const TrialResult& trial) {
  DetectionLog log;
  for (const auto& f : trial.frames) log.append(f.step, f.far, f.near);
  return log;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

void write_campaign(const CampaignResult& campaign, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir / "trajectories", ec);
  if (!ec) fs::create_directories(out_dir / "detections", ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + out_dir.string() + "'");

  for (const auto& m : campaign.modes) {
    for (const auto& t : m.trials) {
      if (t.frames.empty()) continue;
      std::ostringstream traj;
      write_trajectory_csv(traj, t);
      write_file(out_dir / trajectory_file_name(m.mode, t.trial_id), traj.str());
      std::ostringstream det;
      detection_log_of(t).write(det);
      write_file(out_dir / detection_log_file_name(m.mode, t.trial_id), det.str());
    }
  }
  const auto report = compare_modes(campaign.modes);
  write_file(out_dir / "summary.json", summary_json(campaign, report));
  write_file(out_dir / "report.txt", render_table(report));
}

}  // namespace dualsim
