#pragma once

#include <optional>
#include <string_view>

#include "dualsim/camera.hpp"
#include "dualsim/random.hpp"

namespace dualsim {

enum class ExpertId { Far, Near };

std::string_view to_string(ExpertId id);
std::optional<ExpertId> parse_expert_id(std::string_view text);

/// Whether detection reliability grows (DetectsAbove) or shrinks (DetectsBelow)
/// with the apparent pad width.
enum class ScaleRegime { DetectsAbove, DetectsBelow };

struct Detection {
  ExpertId expert = ExpertId::Far;
  std::optional<BoundingBox> box;
  double confidence = 0.0;

  bool present() const { return box.has_value(); }
  bool operator==(const Detection&) const = default;

  static Detection absent(ExpertId id) { return {id, std::nullopt, 0.0}; }
};

/// Parametric reliability model of one scale-specialized detector.
struct ExpertProfile {
  ExpertId expert = ExpertId::Far;
  double s_center = 8.0;  // px, logistic midpoint over apparent width
  double s_slope = 2.0;   // px
  ScaleRegime regime = ScaleRegime::DetectsAbove;
  double sigma_center_base = 2.0;   // px
  double sigma_center_scale = 0.05;  // center sigma = base + scale * s
  double sigma_size_frac = 0.05;
  double distractor_prob = 0.01;
  // World-frame offset of the helipad-like distractor relative to the pad.
  double distractor_offset_x = 25.0;  // m
  double distractor_offset_y = 0.0;   // m
  // When set, replaces the logistic detection probability.
  std::optional<double> p_det_override;

  static ExpertProfile default_far();
  static ExpertProfile default_near();

  /// Throws std::invalid_argument naming the offending field, prefixed by
  /// `key` (e.g. "experts.far").
  void validate(std::string_view key) const;
};

/// P_det(s) for apparent width s.
double detection_probability(const ExpertProfile& profile, double apparent_width);

/// Uniform draws consumed by every call to detect, present or not.
inline constexpr unsigned kDetectDraws = 8;

/// One synthetic detector frame. `pixels_per_meter` converts the distractor's
/// world offset into the image at the current height (f / z).
Detection detect(const ExpertProfile& profile, const BoundingBox& true_box, double apparent_width,
                 double pixels_per_meter, const CameraModel& cam, Rng& rng);

}  // namespace dualsim
