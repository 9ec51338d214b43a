#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dualsim::csv {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

/// Strips a trailing '\r' left by CRLF files.
std::string_view chomp(std::string_view line);

}  // namespace dualsim::csv
