#pragma once

#include "afsi/core_model.hpp"

#include <string>
#include <string_view>

namespace afsi {

// Input formats. All three are line-oriented UTF-8 text; LF and CRLF line
// terminators are accepted. `role` names the source in ParseError messages
// (a path or a logical name such as "panel.csv").

inline constexpr std::string_view kPanelHeader = "fiscal_year,indicator_id,value";
inline constexpr std::string_view kRegistryHeader =
    "indicator_id,sector,polarity,within_weight,units,display_name";

/// Long-format panel: one `fiscal_year,indicator_id,value` row per cell.
/// Values are plain decimals; a duplicate (year, indicator) row is an error.
Panel parse_panel_csv(std::string_view text, std::string_view role = "panel.csv");

/// Registry rows in file order. Weights are not range-checked here;
/// validate_registry() owns that.
Registry parse_indicator_registry(std::string_view text,
                                  std::string_view role = "indicators.csv");

/// `key=value` lines, `#` comments. Omitted keys keep IndexConfig defaults.
IndexConfig parse_settings(std::string_view text, std::string_view role = "settings.cfg");

/// Reads a whole file; throws ParseError (line 0) when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace afsi
