#pragma once

#include <optional>

namespace dualsim {

/// Downward-facing pinhole camera. Image axes are aligned with world x/y and
/// the principal point sits at the image center.
struct CameraModel {
  int image_width = 448;
  int image_height = 448;
  double focal_length = 224.0;  // pixels

  double cx() const { return image_width / 2.0; }
  double cy() const { return image_height / 2.0; }

  void validate() const;
};

struct HelipadSpec {
  double x = -80.0;  // world frame, meters
  double y = 75.0;
  double side_length = 12.0;

  void validate() const;
};

/// Pixel-space box given by its center and extent.
struct BoundingBox {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  bool operator==(const BoundingBox&) const = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool operator==(const Vec3&) const = default;
};

/// World-frame vehicle state; position.z is height above the ground plane.
struct VehicleState {
  Vec3 position;
  Vec3 velocity;
  bool operator==(const VehicleState&) const = default;
};

/// Projection of the pad footprint before any clipping. Throws
/// std::domain_error when the camera is at or below the ground.
BoundingBox project_helipad_unclamped(const VehicleState& state, const HelipadSpec& pad,
                                      const CameraModel& cam);

/// Clips a box to the image rectangle and recenters it on the clipped extent.
/// Returns nothing when the box lies entirely outside the frame.
std::optional<BoundingBox> clamp_to_frame(const BoundingBox& box, const CameraModel& cam);

/// Ground-truth box as the camera sees it (clipped). Empty when the pad is out
/// of view.
std::optional<BoundingBox> project_helipad(const VehicleState& state, const HelipadSpec& pad,
                                           const CameraModel& cam);

/// Unclipped apparent pad width f*D/z in pixels.
double apparent_width(const VehicleState& state, const HelipadSpec& pad, const CameraModel& cam);

}  // namespace dualsim
