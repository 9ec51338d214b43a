#include "dualsim/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualsim/errors.hpp"

namespace dualsim {

void DynamicsParams::validate() const {
  if (!(dt > 0.0)) throw ConfigError("dynamics.dt", "must be positive");
  if (!(tau >= 0.0)) throw ConfigError("dynamics.tau", "must be non-negative");
}

VehicleState step(const VehicleState& state, const VelocityCommand& cmd,
                  const DynamicsParams& params) {
  const double gain = params.dt / std::max(params.tau, params.dt);
  VehicleState next = state;
  if (gain == 1.0) {
    next.velocity = {cmd.v_x, cmd.v_y, cmd.v_z};
  } else {
    next.velocity.x += gain * (cmd.v_x - state.velocity.x);
    next.velocity.y += gain * (cmd.v_y - state.velocity.y);
    next.velocity.z += gain * (cmd.v_z - state.velocity.z);
  }
  next.position.x += params.dt * next.velocity.x;
  next.position.y += params.dt * next.velocity.y;
  next.position.z = std::max(state.position.z + params.dt * next.velocity.z, 0.0);
  return next;
}

}  // namespace dualsim
