#pragma once

#include <cstddef>
#include <deque>
#include <optional>

#include "dualsim/camera.hpp"
#include "dualsim/expert.hpp"

namespace dualsim {

struct GateParams {
  std::size_t window = 5;  // N
  int coast_limit = 10;

  void validate() const;
};

/// Mutable per-trial gate state. One instance per trial; never shared.
struct GateState {
  explicit GateState(GateParams params = {}) : params(params) {}

  GateParams params;
  std::deque<BoundingBox> window;  // most recent last
  std::optional<ExpertId> last_selected;
  int coast_counter = 0;
};

struct GateOutput {
  std::optional<BoundingBox> smoothed_box;
  std::optional<ExpertId> selected_expert;
  std::optional<double> raw_distance;  // D of the selected expert
  bool tracking_lost = false;
};

/// |u - c_x| + |v - c_y|
double l1_center_distance(const BoundingBox& box, const CameraModel& cam);

/// Component-wise mean of the window; empty window gives nothing.
std::optional<BoundingBox> window_mean(const std::deque<BoundingBox>& window);

/// Hard-gated selection followed by moving-average smoothing.
///
/// Both present: the expert whose center is L1-closest to the principal point
/// wins; an exact tie keeps the previous choice (NEAR when there is none).
/// One present: it is selected. None: the previous smoothed box is reused for
/// up to coast_limit frames, after which tracking is declared lost and the
/// window is cleared.
GateOutput select_expert(const Detection& far, const Detection& near, GateState& state,
                         const CameraModel& cam);

}  // namespace dualsim
