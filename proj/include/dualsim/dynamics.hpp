#pragma once

#include "dualsim/camera.hpp"
#include "dualsim/servo.hpp"

namespace dualsim {

struct DynamicsParams {
  double dt = 0.05;  // s
  double tau = 0.4;  // s, first-order velocity lag; 0 tracks instantly

  void validate() const;
};

/// Velocity relaxes toward the command with gain dt / max(tau, dt), then the
/// position integrates explicitly. Height is floored at the ground plane.
VehicleState step(const VehicleState& state, const VelocityCommand& cmd,
                  const DynamicsParams& params);

}  // namespace dualsim
