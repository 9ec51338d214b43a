#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dualsim/config.hpp"
#include "dualsim/detection_log.hpp"

namespace dualsim {

struct ReplayFrame {
  long long frame = 0;
  GateOutput gate;
  std::optional<ErrorSignals> errors;
};

/// Feeds a recorded log through the gate and the servo error computation, in
/// ascending frame order, without any dynamics.
std::vector<ReplayFrame> replay_log(const DetectionLog& log, const SimConfig& config);

inline constexpr std::string_view kReplayCsvHeader =
    "frame,selected,raw_distance,u_hat,v_hat,w_hat,h_hat,tracking_lost,e_x,e_y,A,e_z";

void write_replay_csv(std::ostream& out, std::span<const ReplayFrame> frames);

}  // namespace dualsim
