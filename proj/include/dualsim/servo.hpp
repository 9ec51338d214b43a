#pragma once

#include "dualsim/camera.hpp"

namespace dualsim {

struct ControllerGains {
  double k_xy = 0.02;             // (m/s) per px
  double k_z = 1.5;               // m/s, maximum descent rate
  double v_lat_max = 2.0;         // m/s
  double align_threshold = 30.0;  // px
  double area_ref = 72253.44;     // px^2

  /// Reference area of the pad seen from `z_ref` meters: (f * D / z_ref)^2.
  static double reference_area(const CameraModel& cam, const HelipadSpec& pad, double z_ref);

  void validate() const;
};

struct ErrorSignals {
  double e_x = 0.0;   // px
  double e_y = 0.0;   // px
  double area = 0.0;  // px^2
  double e_z = 0.0;   // px^2, area_ref - area
};

/// World-frame velocity command; v_z < 0 descends.
struct VelocityCommand {
  double v_x = 0.0;
  double v_y = 0.0;
  double v_z = 0.0;
  bool operator==(const VelocityCommand&) const = default;
};

ErrorSignals compute_errors(const BoundingBox& box, const CameraModel& cam,
                            const ControllerGains& gains);

/// Proportional lateral law with saturation. Descent is proportional to the
/// normalized positive area error and only enabled while the lateral error
/// norm is within align_threshold.
VelocityCommand compute_command(const ErrorSignals& err, const ControllerGains& gains);

}  // namespace dualsim
