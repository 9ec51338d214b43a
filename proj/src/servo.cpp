#include "dualsim/servo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dualsim/errors.hpp"

namespace dualsim {

double ControllerGains::reference_area(const CameraModel& cam, const HelipadSpec& pad,
                                       double z_ref) {
  if (!(z_ref > 0.0)) throw ConfigError("gains.z_ref", "must be positive");
  const double side = cam.focal_length * pad.side_length / z_ref;
  return side * side;
}

void ControllerGains::validate() const {
  if (!(k_xy > 0.0)) throw ConfigError("gains.k_xy", "must be positive");
  if (!(k_z > 0.0)) throw ConfigError("gains.k_z", "must be positive");
  if (!(v_lat_max > 0.0)) throw ConfigError("gains.v_lat_max", "must be positive");
  if (!(align_threshold > 0.0)) throw ConfigError("gains.align_threshold", "must be positive");
  if (!(area_ref > 0.0)) throw ConfigError("gains.area_ref", "must be positive");
}

ErrorSignals compute_errors(const BoundingBox& box, const CameraModel& cam,
                            const ControllerGains& gains) {
  ErrorSignals err;
  err.e_x = cam.cx() - box.u;
  err.e_y = cam.cy() - box.v;
  err.area = box.w * box.h;
  err.e_z = gains.area_ref - err.area;
  return err;
}

VelocityCommand compute_command(const ErrorSignals& err, const ControllerGains& gains) {
  VelocityCommand cmd;
  cmd.v_x = std::clamp(-gains.k_xy * err.e_x, -gains.v_lat_max, gains.v_lat_max);
  cmd.v_y = std::clamp(-gains.k_xy * err.e_y, -gains.v_lat_max, gains.v_lat_max);
  if (std::hypot(err.e_x, err.e_y) <= gains.align_threshold) {
    const double ratio = std::clamp(std::max(err.e_z, 0.0) / gains.area_ref, 0.0, 1.0);
    cmd.v_z = -gains.k_z * ratio;
  }
  // -0.0 would print as "-0" in the logs.
  if (cmd.v_x == 0.0) cmd.v_x = 0.0;
  if (cmd.v_y == 0.0) cmd.v_y = 0.0;
  if (cmd.v_z == 0.0) cmd.v_z = 0.0;
  return cmd;
}

}  // namespace dualsim
