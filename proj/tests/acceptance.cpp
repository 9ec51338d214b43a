// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dualsim/campaign.hpp"
#include "dualsim/replay.hpp"
#include "dualsim/report.hpp"
#include "dualsim/trial.hpp"
#include "oracles.hpp"

using namespace dualsim;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Detection box_at(ExpertId id, double u, double v, double w = 20, double h = 20) {
  return {id, BoundingBox{u, v, w, h}, 0.9};
}

Outcome gating_exactness() {
  const auto t0 = Clock::now();
  const CameraModel cam;
  std::mt19937_64 gen(1001);
  std::uniform_real_distribution<double> coord(0, 448);
  std::uniform_int_distribution<int> grid(210, 238);
  GateState state;
  int violations = 0, ties = 0;
  for (int i = 0; i < 10000; ++i) {
    const bool ints = i % 3 == 0;
    auto c = [&] { return ints ? static_cast<double>(grid(gen)) : coord(gen); };
    const auto far = box_at(ExpertId::Far, c(), c());
    const auto near = box_at(ExpertId::Near, c(), c());
    const auto prev = state.last_selected;
    const auto out = select_expert(far, near, state, cam);
    const double df = std::abs(far.box->u - 224) + std::abs(far.box->v - 224);
    const double dn = std::abs(near.box->u - 224) + std::abs(near.box->v - 224);
    ties += df == dn;
    const ExpertId want = df < dn ? ExpertId::Far : dn < df ? ExpertId::Near : prev.value_or(ExpertId::Near);
    violations += out.selected_expert != want;
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < 1.0,
          fmt("%.0f violations over 10000 pairs (%.0f ties), %.3f s", violations, ties, t)};
}

Outcome smoothing_exactness() {
  const CameraModel cam;
  std::mt19937_64 gen(1002);
  std::uniform_real_distribution<double> coord(0, 448), size(5, 200);
  int mismatches = 0;
  GateState state;
  std::vector<oracle::Box> history;
  for (int t = 0; t < 5000; ++t) {
    const oracle::Box b{coord(gen), coord(gen), size(gen), size(gen)};
    const auto out = select_expert(box_at(ExpertId::Near, b.u, b.v, b.w, b.h),
                                   Detection::absent(ExpertId::Far), state, cam);
    history.push_back(b);
    const auto want = oracle::windowed_mean(history, 5);
    const auto& got = *out.smoothed_box;
    mismatches += got.u != want.u || got.v != want.v || got.w != want.w || got.h != want.h;
  }

  const double sigma = 3.0;
  std::normal_distribution<double> noise(0.0, sigma);
  GateState noisy;
  std::vector<double> u;
  for (int t = 0; t < 10000 + 4; ++t) {
    const auto out = select_expert(box_at(ExpertId::Far, 224 + noise(gen), 224),
                                   Detection::absent(ExpertId::Near), noisy, cam);
    if (t >= 4) u.push_back(out.smoothed_box->u);
  }
  const double expected = sigma / std::sqrt(5.0);
  const double got = oracle::sample_std(u);
  const double rel = std::abs(got - expected) / expected;
  return {mismatches == 0 && rel <= 0.15,
          fmt("%.0f oracle mismatches; smoothed std %.4f vs %.4f", mismatches, got, expected) +
              fmt(" (%.1f%% off)", 100 * rel)};
}

Outcome servo_convergence() {
  SimConfig cfg;
  for (ExpertProfile* p : {&cfg.far, &cfg.near}) {
    p->sigma_center_base = p->sigma_center_scale = p->sigma_size_frac = p->distractor_prob = 0.0;
    p->p_det_override = 1.0;
  }
  const auto r = run_trial(cfg, ControllerMode::Dual, {{{-86, 75, 70}, {}}, 1}, 0);
  const bool ok = r.termination == Termination::Landed && r.touchdown_error < 0.5 && r.steps <= 2000;
  return {ok, std::string(to_string(r.termination)) +
                  fmt(", touchdown error %.3g m after %.0f steps", r.touchdown_error, r.steps)};
}

Outcome table_ordering() {
  const auto t0 = Clock::now();
  int dual_all_success = 0, near_lost_all_110 = 0, ordering = 0, near_110_trials = 0;
  const int campaigns = 20;
  for (int seed = 1; seed <= campaigns; ++seed) {
    SimConfig cfg;
    cfg.trial.seed = static_cast<std::uint64_t>(seed);
    const auto c = run_campaign(cfg, 4);
    const auto report = compare_modes(c.modes);
    const auto* dual = c.find(ControllerMode::Dual);
    const auto* near = c.find(ControllerMode::NearOnly);
    bool all_ok = true;
    for (const auto& t : dual->trials) all_ok = all_ok && t.success;
    dual_all_success += all_ok;
    bool lost = true;
    for (const auto& t : near->trials) {
      if (t.initial_position.z == 110.0) {
        ++near_110_trials;
        lost = lost && t.termination == Termination::TrackingLost;
      }
    }
    near_lost_all_110 += lost;
    const ErrorSummary *sd = nullptr, *sf = nullptr, *sn = nullptr;
    for (const auto& s : report.summaries) {
      if (s.mode == "DUAL") sd = &s;
      if (s.mode == "FAR_ONLY") sf = &s;
      if (s.mode == "NEAR_ONLY") sn = &s;
    }
    ordering += sd->mean_error < sf->mean_error && sd->std_error < sf->std_error &&
                sd->std_error < sn->std_error;
  }
  const double t = seconds_since(t0);
  const bool ok = dual_all_success == campaigns && near_lost_all_110 == campaigns &&
                  ordering >= 18 && t < 120.0;
  return {ok, fmt("DUAL 100%% success in %.0f/20, NEAR_ONLY lost every 110 m trial in %.0f/20, ",
                  dual_all_success, near_lost_all_110) +
                  fmt("ordering held in %.0f/20 (%.0f NEAR 110 m trials), ", ordering, near_110_trials) +
                  fmt("%.2f s", t)};
}

Outcome wilcoxon_exactness() {
  auto p_of = [](const std::vector<double>& d) {
    return wilcoxon_signed_rank(d, std::vector<double>(d.size(), 0.0)).p_two_sided;
  };
  const double p5 = p_of({1.5, 2.25, 3.0, 4.5, 7.0});
  const double p10 = p_of({-1, -2, -3, -4, -5, -6, -7, -8, -9, -10});
  std::mt19937_64 gen(1005);
  std::uniform_int_distribution<int> len(1, 12), small(-3, 3);
  std::uniform_real_distribution<double> real(-5, 5);
  int mismatches = 0, identity = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = len(gen);
    std::vector<double> a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = i % 2 ? small(gen) : real(gen);
      b[k] = i % 2 ? small(gen) : real(gen);
    }
    const auto got = wilcoxon_signed_rank(a, b);
    const auto rev = wilcoxon_signed_rank(b, a);
    const auto want = oracle::wilcoxon_by_enumeration(a, b);
    mismatches += got.p_two_sided != want.p || got.w_plus != want.w_plus ||
                  got.w_minus != want.w_minus || got.n_effective != want.n;
    const double m = static_cast<double>(got.n_effective);
    identity += got.w_plus != rev.w_minus || got.w_minus != rev.w_plus ||
                got.p_two_sided != rev.p_two_sided || got.w_plus + got.w_minus != m * (m + 1) / 2;
  }
  const bool ok = p5 == 0.0625 && p10 == 2.0 / 1024.0 && mismatches == 0 && identity == 0;
  return {ok, fmt("p(n=5) = %.6g, p(n=10) = %.7g, ", p5, p10) +
                  fmt("%.0f oracle mismatches, %.0f symmetry/identity failures over 200 lists",
                      mismatches, identity)};
}

std::string campaign_bytes(const CampaignResult& c) {
  std::ostringstream out;
  out << summary_json(c, compare_modes(c.modes));
  for (const auto& m : c.modes)
    for (const auto& t : m.trials) write_trajectory_csv(out, t);
  return out.str();
}

Outcome determinism() {
  SimConfig cfg;
  cfg.trial.seed = 42;
  const auto serial_a = campaign_bytes(run_campaign(cfg, 1, true));
  const auto serial_b = campaign_bytes(run_campaign(cfg, 1, true));
  const auto threaded = campaign_bytes(run_campaign(cfg, 8, true));
  const bool ok = serial_a == serial_b && serial_a == threaded;
  return {ok, std::to_string(serial_a.size()) + " bytes compared; serial repeat " +
                  (serial_a == serial_b ? "identical" : "differs") + ", 8 threads " +
                  (serial_a == threaded ? "identical" : "differs")};
}

Outcome projection_invariants() {
  const CameraModel cam;
  const HelipadSpec pad;
  const auto centered = project_helipad(VehicleState{{pad.x, pad.y, 50}, {}}, pad, cam);
  const bool center_ok = centered && centered->u == 224.0 && centered->v == 224.0;

  bool monotone = true;
  double prev_area = 0;
  for (double z = 120; z >= 1; z -= 0.5) {
    const auto b = project_helipad_unclamped(VehicleState{{-86, 75, z}, {}}, pad, cam);
    monotone = monotone && b.area() > prev_area;
    prev_area = b.area();
  }

  std::mt19937_64 gen(1007);
  std::uniform_real_distribution<double> off(-20, 20), alt(20, 120);
  double worst = 0;
  for (int i = 0; i < 100; ++i) {
    const double dx = off(gen), dy = off(gen), z = alt(gen);
    const auto b = project_helipad_unclamped(VehicleState{{pad.x - dx, pad.y - dy, z}, {}}, pad, cam);
    const double want_u = 224 + cam.focal_length * dx / z;
    const double want_v = 224 + cam.focal_length * dy / z;
    worst = std::max({worst, std::abs(b.u - want_u) / std::max(1.0, std::abs(want_u)),
                      std::abs(b.v - want_v) / std::max(1.0, std::abs(want_v))});
  }
  const bool ok = center_ok && monotone && worst <= 4 * 2.220446049250313e-16;
  return {ok, std::string(center_ok ? "centered pad at (224, 224)" : "centered pad OFF CENTER") +
                  (monotone ? ", area strictly monotone" : ", area NOT monotone") +
                  fmt(", worst relative linearity error %.2g", worst)};
}

Outcome replay_round_trip() {
  SimConfig cfg;
  cfg.trial.seed = 42;
  const auto c = run_campaign(cfg, 4, true);
  long long frames = 0, mismatches = 0;
  for (const auto& m : c.modes) {
    for (const auto& t : m.trials) {
      std::stringstream text;
      detection_log_of(t).write(text);
      const auto replayed = replay_log(DetectionLog::parse(text), cfg);
      if (replayed.size() != t.frames.size()) {
        ++mismatches;
        continue;
      }
      for (std::size_t i = 0; i < replayed.size(); ++i) {
        ++frames;
        mismatches += replayed[i].gate.selected_expert != t.frames[i].gate.selected_expert;
      }
    }
  }
  return {mismatches == 0 && frames > 0,
          fmt("%.0f mismatches over %.0f replayed frames", static_cast<double>(mismatches),
              static_cast<double>(frames))};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"gating selects the L1-nearest expert", gating_exactness},
      {"smoothing equals windowed mean and reduces noise", smoothing_exactness},
      {"noise-free servo lands on the pad", servo_convergence},
      {"mode ordering over 20 seeded campaigns", table_ordering},
      {"exact signed-rank test", wilcoxon_exactness},
      {"deterministic output under concurrency", determinism},
      {"projection invariants", projection_invariants},
      {"detection log replay round trip", replay_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
