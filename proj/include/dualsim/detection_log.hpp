#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualsim/expert.hpp"

namespace dualsim {

inline constexpr std::string_view kDetectionLogHeader = "frame,expert,u,v,w,h,confidence,present";

/// Parse failure in a DetectionLog; line() is 1-based and counts the header.
class LogFormatError : public std::runtime_error {
 public:
  LogFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct FrameDetections {
  Detection far = Detection::absent(ExpertId::Far);
  Detection near = Detection::absent(ExpertId::Near);
};

/// Recorded per-frame detections of both experts, keyed by frame number.
class DetectionLog {
 public:
  static DetectionLog parse(std::istream& in);
  static DetectionLog load(const std::string& path);

  void append(long long frame, const Detection& far, const Detection& near);

  /// Both experts' detections for `frame`; throws std::out_of_range.
  std::pair<Detection, Detection> replay_detect(long long frame) const;

  std::size_t size() const { return frames_.size(); }
  bool empty() const { return frames_.empty(); }
  std::vector<long long> frame_numbers() const;

  void write(std::ostream& out) const;

 private:
  std::map<long long, FrameDetections> frames_;
};

/// One log record (no trailing newline).
std::string format_detection_record(long long frame, const Detection& det);

}  // namespace dualsim
