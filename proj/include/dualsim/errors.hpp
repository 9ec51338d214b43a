#pragma once

#include <stdexcept>
#include <string>

namespace dualsim {

/// Invalid or inconsistent configuration. key() is the dotted path of the
/// offending entry, e.g. "gains.k_xy".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& detail)
      : std::invalid_argument(key + ": " + detail), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace dualsim
