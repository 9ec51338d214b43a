#include "dualsim/detection_log.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "dualsim/csv.hpp"

namespace dualsim {

std::string format_detection_record(long long frame, const Detection& det) {
  using csv::format_double;
  std::string line = std::to_string(frame);
  line += ',';
  line += to_string(det.expert);
  if (det.box) {
    for (double x : {det.box->u, det.box->v, det.box->w, det.box->h, det.confidence}) {
      line += ',';
      line += format_double(x);
    }
    line += ",1";
  } else {
    line += ",0,0,0,0,0,0";
  }
  return line;
}

DetectionLog DetectionLog::parse(std::istream& in) {
  DetectionLog log;
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw)) throw LogFormatError(1, "missing header");
  ++line_no;
  if (csv::chomp(raw) != kDetectionLogHeader) {
    throw LogFormatError(1, "expected header '" + std::string(kDetectionLogHeader) + "'");
  }

  std::set<std::pair<long long, ExpertId>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = csv::chomp(raw);
    if (line.empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != 8) {
      throw LogFormatError(line_no, "expected 8 fields, got " + std::to_string(fields.size()));
    }
    const auto frame = csv::parse_int(fields[0]);
    if (!frame || *frame < 0) throw LogFormatError(line_no, "bad frame index");
    const auto expert = parse_expert_id(fields[1]);
    if (!expert) throw LogFormatError(line_no, "expert must be FAR or NEAR");
    double values[5];
    for (int i = 0; i < 5; ++i) {
      const auto v = csv::parse_double(fields[2 + i]);
      if (!v) throw LogFormatError(line_no, "bad number in field " + std::to_string(3 + i));
      values[i] = *v;
    }
    const auto present = csv::parse_int(fields[7]);
    if (!present || (*present != 0 && *present != 1)) {
      throw LogFormatError(line_no, "present must be 0 or 1");
    }
    if (!seen.insert({*frame, *expert}).second) {
      throw LogFormatError(line_no, "duplicate record for frame " + std::to_string(*frame));
    }

    Detection det = Detection::absent(*expert);
    if (*present == 1) {
      if (!(values[2] > 0.0) || !(values[3] > 0.0)) {
        throw LogFormatError(line_no, "present box needs positive width and height");
      }
      if (!(values[4] >= 0.0 && values[4] <= 1.0)) {
        throw LogFormatError(line_no, "confidence must be in [0, 1]");
      }
      det.box = BoundingBox{values[0], values[1], values[2], values[3]};
      det.confidence = values[4];
    }
    auto& slot = log.frames_[*frame];
    (*expert == ExpertId::Far ? slot.far : slot.near) = det;
  }
  return log;
}

DetectionLog DetectionLog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open detection log '" + path + "'");
  return parse(in);
}

void DetectionLog::append(long long frame, const Detection& far, const Detection& near) {
  frames_[frame] = FrameDetections{far, near};
}

std::pair<Detection, Detection> DetectionLog::replay_detect(long long frame) const {
  const auto it = frames_.find(frame);
  if (it == frames_.end()) {
    throw std::out_of_range("frame " + std::to_string(frame) + " not in detection log");
  }
  return {it->second.far, it->second.near};
}

std::vector<long long> DetectionLog::frame_numbers() const {
  std::vector<long long> out;
  out.reserve(frames_.size());
  for (const auto& [frame, _] : frames_) out.push_back(frame);
  return out;
}

void DetectionLog::write(std::ostream& out) const {
  out << kDetectionLogHeader << '\n';
  for (const auto& [frame, dets] : frames_) {
    out << format_detection_record(frame, dets.far) << '\n';
    out << format_detection_record(frame, dets.near) << '\n';
  }
}

}  // namespace dualsim
