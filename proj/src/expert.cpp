#include "dualsim/expert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dualsim/errors.hpp"

namespace dualsim {

std::string_view to_string(ExpertId id) { return id == ExpertId::Far ? "FAR" : "NEAR"; }

std::optional<ExpertId> parse_expert_id(std::string_view text) {
  if (text == "FAR") return ExpertId::Far;
  if (text == "NEAR") return ExpertId::Near;
  return std::nullopt;
}

ExpertProfile ExpertProfile::default_far() { return ExpertProfile{}; }

ExpertProfile ExpertProfile::default_near() {
  ExpertProfile p;
  p.expert = ExpertId::Near;
  p.s_center = 27.0;
  p.s_slope = 0.2;
  p.regime = ScaleRegime::DetectsAbove;
  p.sigma_center_base = 1.5;
  p.sigma_center_scale = 0.0;
  p.sigma_size_frac = 0.03;
  p.distractor_prob = 0.0;
  return p;
}

void ExpertProfile::validate(std::string_view key) const {
  const auto fail = [&](std::string_view field, std::string_view what) {
    throw ConfigError(std::string(key) + "." + std::string(field), std::string(what));
  };
  if (!std::isfinite(s_center)) fail("s_center", "must be finite");
  if (!(s_slope > 0.0)) fail("s_slope", "must be positive");
  if (!(sigma_center_base >= 0.0)) fail("sigma_center_base", "must be non-negative");
  if (!(sigma_center_scale >= 0.0)) fail("sigma_center_scale", "must be non-negative");
  if (!(sigma_size_frac >= 0.0)) fail("sigma_size_frac", "must be non-negative");
  if (!(distractor_prob >= 0.0 && distractor_prob <= 1.0)) fail("distractor_prob", "must be in [0, 1]");
  if (!std::isfinite(distractor_offset_x)) fail("distractor_offset", "must be finite");
  if (!std::isfinite(distractor_offset_y)) fail("distractor_offset", "must be finite");
  if (p_det_override && !(*p_det_override >= 0.0 && *p_det_override <= 1.0)) {
    fail("p_det_override", "must be in [0, 1]");
  }
}

double detection_probability(const ExpertProfile& profile, double apparent_width) {
  if (profile.p_det_override) return *profile.p_det_override;
  double x = (apparent_width - profile.s_center) / profile.s_slope;
  if (profile.regime == ScaleRegime::DetectsBelow) x = -x;
  return 1.0 / (1.0 + std::exp(-x));
}

Detection detect(const ExpertProfile& profile, const BoundingBox& true_box, double apparent_width,
                 double pixels_per_meter, const CameraModel& cam, Rng& rng) {
  if (!(apparent_width > 0.0)) throw std::invalid_argument("apparent width must be positive");

  // Fixed layout of kDetectDraws uniforms: detect, distractor, then three
  // normals (center u, center v, size) at two uniforms each.
  const double u_detect = rng.uniform();
  const double u_distractor = rng.uniform();
  const double n_u = rng.normal();
  const double n_v = rng.normal();
  const double n_size = rng.normal();

  const double p_det = detection_probability(profile, apparent_width);
  if (!(u_detect < p_det)) return Detection::absent(profile.expert);

  const double sigma_center =
      profile.sigma_center_base + profile.sigma_center_scale * apparent_width;
  BoundingBox box = true_box;
  if (u_distractor < profile.distractor_prob) {
    box.u += pixels_per_meter * profile.distractor_offset_x;
    box.v += pixels_per_meter * profile.distractor_offset_y;
  }
  box.u += sigma_center * n_u;
  box.v += sigma_center * n_v;
  const double size_factor = std::max(1.0 + profile.sigma_size_frac * n_size, 1e-3);
  box.w *= size_factor;
  box.h *= size_factor;

  const auto clipped = clamp_to_frame(box, cam);
  if (!clipped) return Detection::absent(profile.expert);
  return {profile.expert, clipped, p_det};
}

}  // namespace dualsim
