#pragma once

#include "afsi/aggregation.hpp"
#include "afsi/analysis.hpp"
#include "afsi/normalization.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace afsi {

// CSV emitters. Numbers carry 17 significant digits; lines end in LF.

inline constexpr std::string_view kIndicesHeader = "fiscal_year,RS,FS,ES,MS,AFSI";
inline constexpr std::string_view kStatsHeader = "indicator_id,mean,std,n";
inline constexpr std::string_view kFlagsHeader = "series,fiscal_year,severity,trigger";
inline constexpr std::string_view kWhatIfHeader =
    "indicator_id,fiscal_year,delta,sector,delta_sub_index,delta_afsi,"
    "predicted_delta_sub_index,predicted_delta_afsi";

/// Rows ordered by (fiscal_year, indicator_id).
std::string write_panel_csv(const Panel& panel);
std::string write_registry_csv(std::span<const IndicatorSpec> registry);
std::string write_indices_csv(const StabilityIndexSeries& series);
std::string write_stats_csv(std::span<const SummaryStats> stats);
std::string write_flags_csv(std::span<const WarningFlag> flags);
/// Predicted columns are empty when no closed form applies.
std::string write_whatif_csv(const WhatIfResult& result);

/// Reads indices.csv back. Throws ParseError.
StabilityIndexSeries read_indices_csv(std::string_view text,
                                      std::string_view role = "indices.csv");

/// "mean (std)" with 4 decimals, e.g. "0.0652 (0.0131)".
std::string format_mean_std(const SummaryStats& stats);

// ----------------------------------------------------------------------------
// Charts

struct ChartSeries {
    std::string label;
    std::vector<double> values;
};

struct ChartSpec {
    std::string title;
    std::vector<int> years;  // x-axis ticks
    std::vector<ChartSeries> series;
    int width = 800;
    int height = 450;
};

/// Standalone SVG 1.1 line chart. Output is a pure function of the spec.
/// Throws DegenerateInputError for fewer than 2 points and
/// AxisMismatchError when a series does not match the year axis.
std::string emit_svg(const ChartSpec& chart);

/// One chart per sector plus the composite, as (file name, spec) pairs in
/// the order rsi, msi, fsi, esi, afsi.
std::vector<std::pair<std::string, ChartSpec>> index_charts(const StabilityIndexSeries& series);

}  // namespace afsi
