#include "dualsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dualsim/errors.hpp"

namespace dualsim {

using nlohmann::ordered_json;

std::string_view to_string(ControllerMode mode) {
  switch (mode) {
    case ControllerMode::NearOnly: return "NEAR_ONLY";
    case ControllerMode::FarOnly: return "FAR_ONLY";
    case ControllerMode::Dual: return "DUAL";
  }
  return "?";
}

std::optional<ControllerMode> parse_mode(std::string_view text) {
  if (text == "NEAR_ONLY" || text == "near") return ControllerMode::NearOnly;
  if (text == "FAR_ONLY" || text == "far") return ControllerMode::FarOnly;
  if (text == "DUAL" || text == "dual") return ControllerMode::Dual;
  return std::nullopt;
}

void TrialConfig::validate() const {
  const auto check_range = [](const Range& r, const char* key) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
      throw ConfigError(key, "must be a finite [low, high] pair with low <= high");
    }
  };
  check_range(x_range, "campaign.x_range");
  check_range(y_range, "campaign.y_range");
  if (altitudes.empty()) throw ConfigError("campaign.altitudes", "must not be empty");
  for (double z : altitudes) {
    if (!(z > 0.0) || !std::isfinite(z)) {
      throw ConfigError("campaign.altitudes", "entries must be positive");
    }
  }
  if (trials < 1) throw ConfigError("campaign.trials", "must be at least 1");
  if (max_steps < 1) throw ConfigError("campaign.max_steps", "must be positive");
  if (!(commit_altitude > 0.0)) throw ConfigError("campaign.commit_altitude", "must be positive");
  if (modes.empty()) throw ConfigError("campaign.modes", "must not be empty");
  std::set<ControllerMode> unique(modes.begin(), modes.end());
  if (unique.size() != modes.size()) throw ConfigError("campaign.modes", "has duplicates");
}

double SimConfig::reference_altitude() const {
  return camera.focal_length * helipad.side_length / std::sqrt(gains.area_ref);
}

void SimConfig::validate() const {
  camera.validate();
  helipad.validate();
  if (!std::isfinite(helipad.x) || !std::isfinite(helipad.y)) {
    throw ConfigError("helipad", "center must be finite");
  }
  far.validate("experts.far");
  near.validate("experts.near");
  if (far.expert != ExpertId::Far) throw ConfigError("experts.far", "profile is not the FAR expert");
  if (near.expert != ExpertId::Near) {
    throw ConfigError("experts.near", "profile is not the NEAR expert");
  }
  gate.validate();
  gains.validate();
  dynamics.validate();
  trial.validate();
  for (double z : trial.altitudes) {
    if (!(z > trial.commit_altitude)) {
      throw ConfigError("campaign.altitudes", "entries must lie above campaign.commit_altitude");
    }
  }
  if (!(trial.commit_altitude > reference_altitude())) {
    throw ConfigError("campaign.commit_altitude",
                      "must exceed the reference altitude implied by gains (z_ref = " +
                          std::to_string(reference_altitude()) +
                          " m), otherwise descent stalls above it");
  }
}

namespace {

// Reads JSON members into a struct while tracking the dotted key path.
class Reader {
 public:
  Reader(const ordered_json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "must be an object");
  }

  void allow(std::initializer_list<const char*> keys) const {
    std::set<std::string> known(keys.begin(), keys.end());
    for (const auto& [k, _] : node_.items()) {
      if (!known.count(k)) throw ConfigError(key(k), "unknown key");
    }
  }

  bool has(const char* k) const { return node_.contains(k); }

  void number(const char* k, double& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_number()) throw ConfigError(key(k), "must be a number");
    out = v.get<double>();
  }

  void integer(const char* k, int& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_number_integer()) throw ConfigError(key(k), "must be an integer");
    const auto x = v.get<long long>();
    if (x < -2147483647LL || x > 2147483647LL) throw ConfigError(key(k), "out of range");
    out = static_cast<int>(x);
  }

  void size(const char* k, std::size_t& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ConfigError(key(k), "must be a non-negative integer");
    }
    out = v.get<std::size_t>();
  }

  void seed(const char* k, std::uint64_t& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_number_unsigned()) throw ConfigError(key(k), "must be a non-negative integer");
    out = v.get<std::uint64_t>();
  }

  void range(const char* k, Range& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ConfigError(key(k), "must be a [low, high] number pair");
    }
    out = {v[0].get<double>(), v[1].get<double>()};
  }

  void numbers(const char* k, std::vector<double>& out) const {
    if (!has(k)) return;
    const auto& v = node_.at(k);
    if (!v.is_array()) throw ConfigError(key(k), "must be an array of numbers");
    out.clear();
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(key(k), "must be an array of numbers");
      out.push_back(x.get<double>());
    }
  }

  const ordered_json& child(const char* k) const { return node_.at(k); }
  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

 private:
  const ordered_json& node_;
  std::string path_;
};

ExpertProfile read_profile(const ordered_json& node, const std::string& path, ExpertProfile p) {
  Reader r(node, path);
  r.allow({"s_center", "s_slope", "regime", "sigma_center_base", "sigma_center_scale",
           "sigma_size_frac", "distractor_prob", "distractor_offset", "p_det_override"});
  r.number("s_center", p.s_center);
  r.number("s_slope", p.s_slope);
  if (r.has("regime")) {
    const auto& v = r.child("regime");
    if (v == "DETECTS_ABOVE") {
      p.regime = ScaleRegime::DetectsAbove;
    } else if (v == "DETECTS_BELOW") {
      p.regime = ScaleRegime::DetectsBelow;
    } else {
      throw ConfigError(r.key("regime"), "must be \"DETECTS_ABOVE\" or \"DETECTS_BELOW\"");
    }
  }
  r.number("sigma_center_base", p.sigma_center_base);
  r.number("sigma_center_scale", p.sigma_center_scale);
  r.number("sigma_size_frac", p.sigma_size_frac);
  r.number("distractor_prob", p.distractor_prob);
  if (r.has("distractor_offset")) {
    Range offset{p.distractor_offset_x, p.distractor_offset_y};
    r.range("distractor_offset", offset);
    p.distractor_offset_x = offset.lo;
    p.distractor_offset_y = offset.hi;
  }
  if (r.has("p_det_override")) {
    const auto& v = r.child("p_det_override");
    if (v.is_null()) {
      p.p_det_override.reset();
    } else if (v.is_number()) {
      p.p_det_override = v.get<double>();
    } else {
      throw ConfigError(r.key("p_det_override"), "must be a number or null");
    }
  }
  return p;
}

ordered_json profile_json(const ExpertProfile& p) {
  ordered_json j;
  j["s_center"] = p.s_center;
  j["s_slope"] = p.s_slope;
  j["regime"] = p.regime == ScaleRegime::DetectsAbove ? "DETECTS_ABOVE" : "DETECTS_BELOW";
  j["sigma_center_base"] = p.sigma_center_base;
  j["sigma_center_scale"] = p.sigma_center_scale;
  j["sigma_size_frac"] = p.sigma_size_frac;
  j["distractor_prob"] = p.distractor_prob;
  j["distractor_offset"] = {p.distractor_offset_x, p.distractor_offset_y};
  j["p_det_override"] = p.p_det_override ? ordered_json(*p.p_det_override) : ordered_json(nullptr);
  return j;
}

}  // namespace

SimConfig parse_config(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }

  SimConfig cfg;
  Reader root(doc, "");
  root.allow({"camera", "helipad", "experts", "gate", "gains", "dynamics", "campaign"});

  if (root.has("camera")) {
    Reader r(root.child("camera"), "camera");
    r.allow({"image_width", "image_height", "focal_length"});
    r.integer("image_width", cfg.camera.image_width);
    r.integer("image_height", cfg.camera.image_height);
    r.number("focal_length", cfg.camera.focal_length);
  }
  if (root.has("helipad")) {
    Reader r(root.child("helipad"), "helipad");
    r.allow({"x", "y", "side_length"});
    r.number("x", cfg.helipad.x);
    r.number("y", cfg.helipad.y);
    r.number("side_length", cfg.helipad.side_length);
  }
  if (root.has("experts")) {
    Reader r(root.child("experts"), "experts");
    r.allow({"far", "near"});
    if (r.has("far")) cfg.far = read_profile(r.child("far"), "experts.far", cfg.far);
    if (r.has("near")) cfg.near = read_profile(r.child("near"), "experts.near", cfg.near);
  }
  if (root.has("gate")) {
    Reader r(root.child("gate"), "gate");
    r.allow({"window", "coast_limit"});
    r.size("window", cfg.gate.window);
    r.integer("coast_limit", cfg.gate.coast_limit);
  }
  // area_ref depends on camera and helipad, so gains are read last among the
  // scene sections.
  double z_ref = 10.0;
  if (root.has("gains")) {
    Reader r(root.child("gains"), "gains");
    r.allow({"k_xy", "k_z", "v_lat_max", "align_threshold", "z_ref", "area_ref"});
    r.number("k_xy", cfg.gains.k_xy);
    r.number("k_z", cfg.gains.k_z);
    r.number("v_lat_max", cfg.gains.v_lat_max);
    r.number("align_threshold", cfg.gains.align_threshold);
    if (r.has("z_ref") && r.has("area_ref")) {
      throw ConfigError("gains.area_ref", "give either z_ref or area_ref, not both");
    }
    r.number("z_ref", z_ref);
    if (r.has("area_ref")) {
      r.number("area_ref", cfg.gains.area_ref);
    } else {
      cfg.gains.area_ref = ControllerGains::reference_area(cfg.camera, cfg.helipad, z_ref);
    }
  } else {
    cfg.gains.area_ref = ControllerGains::reference_area(cfg.camera, cfg.helipad, z_ref);
  }
  if (root.has("dynamics")) {
    Reader r(root.child("dynamics"), "dynamics");
    r.allow({"dt", "tau"});
    r.number("dt", cfg.dynamics.dt);
    r.number("tau", cfg.dynamics.tau);
  }
  if (root.has("campaign")) {
    Reader r(root.child("campaign"), "campaign");
    r.allow({"seed", "trials", "x_range", "y_range", "altitudes", "max_steps", "commit_altitude",
             "modes"});
    r.seed("seed", cfg.trial.seed);
    r.integer("trials", cfg.trial.trials);
    r.range("x_range", cfg.trial.x_range);
    r.range("y_range", cfg.trial.y_range);
    r.numbers("altitudes", cfg.trial.altitudes);
    r.integer("max_steps", cfg.trial.max_steps);
    r.number("commit_altitude", cfg.trial.commit_altitude);
    if (r.has("modes")) {
      const auto& v = r.child("modes");
      if (!v.is_array()) throw ConfigError("campaign.modes", "must be an array of mode names");
      cfg.trial.modes.clear();
      for (const auto& m : v) {
        const auto mode = m.is_string() ? parse_mode(m.get<std::string>()) : std::nullopt;
        if (!mode) throw ConfigError("campaign.modes", "unknown mode " + m.dump());
        cfg.trial.modes.push_back(*mode);
      }
    }
  }
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string config_to_json(const SimConfig& c, int indent) {
  ordered_json j;
  j["camera"] = {{"image_width", c.camera.image_width},
                 {"image_height", c.camera.image_height},
                 {"focal_length", c.camera.focal_length}};
  j["helipad"] = {{"x", c.helipad.x}, {"y", c.helipad.y}, {"side_length", c.helipad.side_length}};
  j["experts"]["far"] = profile_json(c.far);
  j["experts"]["near"] = profile_json(c.near);
  j["gate"] = {{"window", c.gate.window}, {"coast_limit", c.gate.coast_limit}};
  j["gains"] = {{"k_xy", c.gains.k_xy},
                {"k_z", c.gains.k_z},
                {"v_lat_max", c.gains.v_lat_max},
                {"align_threshold", c.gains.align_threshold},
                {"area_ref", c.gains.area_ref}};
  j["dynamics"] = {{"dt", c.dynamics.dt}, {"tau", c.dynamics.tau}};
  ordered_json modes = ordered_json::array();
  for (auto m : c.trial.modes) modes.push_back(std::string(to_string(m)));
  j["campaign"] = {{"seed", c.trial.seed},
                   {"trials", c.trial.trials},
                   {"x_range", {c.trial.x_range.lo, c.trial.x_range.hi}},
                   {"y_range", {c.trial.y_range.lo, c.trial.y_range.hi}},
                   {"altitudes", c.trial.altitudes},
                   {"max_steps", c.trial.max_steps},
                   {"commit_altitude", c.trial.commit_altitude},
                   {"modes", modes}};
  return j.dump(indent);
}

}  // namespace dualsim
