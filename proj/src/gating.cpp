#include "dualsim/gating.hpp"

#include <cmath>
#include <stdexcept>

#include "dualsim/errors.hpp"

namespace dualsim {

void GateParams::validate() const {
  if (window == 0) throw ConfigError("gate.window", "must be at least 1");
  if (coast_limit < 0) throw ConfigError("gate.coast_limit", "must be non-negative");
}

double l1_center_distance(const BoundingBox& box, const CameraModel& cam) {
  return std::abs(box.u - cam.cx()) + std::abs(box.v - cam.cy());
}

std::optional<BoundingBox> window_mean(const std::deque<BoundingBox>& window) {
  if (window.empty()) return std::nullopt;
  BoundingBox sum;
  for (const auto& b : window) {
    sum.u += b.u;
    sum.v += b.v;
    sum.w += b.w;
    sum.h += b.h;
  }
  const double n = static_cast<double>(window.size());
  return BoundingBox{sum.u / n, sum.v / n, sum.w / n, sum.h / n};
}

GateOutput select_expert(const Detection& far, const Detection& near, GateState& state,
                         const CameraModel& cam) {
  GateOutput out;
  const Detection* chosen = nullptr;
  if (far.present() && near.present()) {
    const double d_far = l1_center_distance(*far.box, cam);
    const double d_near = l1_center_distance(*near.box, cam);
    if (d_far < d_near) {
      chosen = &far;
    } else if (d_near < d_far) {
      chosen = &near;
    } else {
      chosen = state.last_selected.value_or(ExpertId::Near) == ExpertId::Far ? &far : &near;
    }
  } else if (far.present()) {
    chosen = &far;
  } else if (near.present()) {
    chosen = &near;
  }

  if (chosen) {
    state.window.push_back(*chosen->box);
    while (state.window.size() > state.params.window) state.window.pop_front();
    state.coast_counter = 0;
    state.last_selected = chosen->expert;
    out.selected_expert = chosen->expert;
    out.raw_distance = l1_center_distance(*chosen->box, cam);
    out.smoothed_box = window_mean(state.window);
    return out;
  }

  ++state.coast_counter;
  if (state.coast_counter > state.params.coast_limit) {
    state.window.clear();
    out.tracking_lost = true;
    return out;
  }
  out.smoothed_box = window_mean(state.window);
  return out;
}

}  // namespace dualsim
