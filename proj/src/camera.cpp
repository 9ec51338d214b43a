#include "dualsim/camera.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualsim/errors.hpp"

namespace dualsim {

void CameraModel::validate() const {
  if (image_width <= 0) throw ConfigError("camera.image_width", "must be positive");
  if (image_height <= 0) throw ConfigError("camera.image_height", "must be positive");
  if (!(focal_length > 0.0)) throw ConfigError("camera.focal_length", "must be positive");
}

void HelipadSpec::validate() const {
  if (!(side_length > 0.0)) throw ConfigError("helipad.side_length", "must be positive");
}

BoundingBox project_helipad_unclamped(const VehicleState& state, const HelipadSpec& pad,
                                      const CameraModel& cam) {
  const double z = state.position.z;
  if (!(z > 0.0)) throw std::domain_error("camera height must be above the ground plane");
  const double scale = cam.focal_length / z;
  const double size = scale * pad.side_length;
  return {cam.cx() + scale * (pad.x - state.position.x),
          cam.cy() + scale * (pad.y - state.position.y), size, size};
}

std::optional<BoundingBox> clamp_to_frame(const BoundingBox& box, const CameraModel& cam) {
  const double left = std::max(box.u - box.w / 2.0, 0.0);
  const double right = std::min(box.u + box.w / 2.0, static_cast<double>(cam.image_width));
  const double top = std::max(box.v - box.h / 2.0, 0.0);
  const double bottom = std::min(box.v + box.h / 2.0, static_cast<double>(cam.image_height));
  if (!(right > left) || !(bottom > top)) return std::nullopt;

  // Fully inside: keep the exact original numbers.
  if (left == box.u - box.w / 2.0 && right == box.u + box.w / 2.0 &&
      top == box.v - box.h / 2.0 && bottom == box.v + box.h / 2.0) {
    return box;
  }
  return BoundingBox{(left + right) / 2.0, (top + bottom) / 2.0, right - left, bottom - top};
}

std::optional<BoundingBox> project_helipad(const VehicleState& state, const HelipadSpec& pad,
                                           const CameraModel& cam) {
  return clamp_to_frame(project_helipad_unclamped(state, pad, cam), cam);
}

double apparent_width(const VehicleState& state, const HelipadSpec& pad, const CameraModel& cam) {
  const double z = state.position.z;
  if (!(z > 0.0)) throw std::domain_error("camera height must be above the ground plane");
  return cam.focal_length * pad.side_length / z;
}

}  // namespace dualsim
