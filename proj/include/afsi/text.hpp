#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace afsi::text {

/// printf-style "%.{digits}g".
std::string general(double value, int digits);
/// 17 significant digits; parses back to the same double.
std::string round_trip(double value);
/// printf-style "%.{decimals}f", with negative zero printed as zero.
std::string fixed(double value, int decimals);

std::vector<std::string_view> split(std::string_view line, char separator);
std::string_view trim(std::string_view s) noexcept;

/// Splits on LF, dropping a trailing CR from each line. A final empty line
/// after the last terminator is not reported.
std::vector<std::string_view> lines(std::string_view text);

/// Whole-token parses; nullopt-like failure is reported through the bool.
bool parse_double(std::string_view token, double& out) noexcept;
bool parse_int(std::string_view token, int& out) noexcept;

}  // namespace afsi::text
