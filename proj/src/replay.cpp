#include "dualsim/replay.hpp"

#include <ostream>

#include "dualsim/csv.hpp"

namespace dualsim {

std::vector<ReplayFrame> replay_log(const DetectionLog& log, const SimConfig& config) {
  GateState gate(config.gate);
  std::vector<ReplayFrame> out;
  out.reserve(log.size());
  for (long long frame : log.frame_numbers()) {
    const auto [far, near] = log.replay_detect(frame);
    ReplayFrame rf;
    rf.frame = frame;
    rf.gate = select_expert(far, near, gate, config.camera);
    if (rf.gate.smoothed_box) {
      rf.errors = compute_errors(*rf.gate.smoothed_box, config.camera, config.gains);
    }
    out.push_back(rf);
  }
  return out;
}

void write_replay_csv(std::ostream& out, std::span<const ReplayFrame> frames) {
  using csv::format_double;
  out << kReplayCsvHeader << '\n';
  for (const auto& f : frames) {
    out << f.frame << ',';
    out << (f.gate.selected_expert ? to_string(*f.gate.selected_expert) : "NONE") << ',';
    if (f.gate.raw_distance) out << format_double(*f.gate.raw_distance);
    out << ',';
    if (const auto& b = f.gate.smoothed_box) {
      out << format_double(b->u) << ',' << format_double(b->v) << ',' << format_double(b->w)
          << ',' << format_double(b->h);
    } else {
      out << ",,,";
    }
    out << ',' << (f.gate.tracking_lost ? 1 : 0) << ',';
    if (const auto& e = f.errors) {
      out << format_double(e->e_x) << ',' << format_double(e->e_y) << ','
          << format_double(e->area) << ',' << format_double(e->e_z);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

}  // namespace dualsim
