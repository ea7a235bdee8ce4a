#pragma once

#include "afsi/aggregation.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afsi {

// What-if analysis holds the baseline normalization (mean/std, or min/range)
// of every indicator fixed, so a raw-unit change moves the indices by a
// closed-form amount. Callers are expected to have validated their inputs;
// only lookups are checked here.

struct Perturbation {
    std::string indicator_id;
    int year = 0;
    double delta = 0.0;  // raw units
};

struct PerturbationOutcome {
    StabilityIndexSeries baseline;
    StabilityIndexSeries perturbed;
};

/// Re-runs the index with every perturbation applied. In normalize_first mode
/// the baseline scaling is frozen; in standardize_after mode the summed
/// sector series are re-standardized with refreshed statistics.
PerturbationOutcome apply_perturbations(const Panel& panel,
                                        std::span<const IndicatorSpec> registry,
                                        const IndexConfig& config,
                                        std::span<const Perturbation> perturbations);

struct WhatIfResult {
    std::string indicator_id;
    int year = 0;
    double delta = 0.0;
    SectorId sector = SectorId::RS;
    double delta_sub_index = 0.0;
    double delta_afsi = 0.0;
    /// Only available for normalize_first configurations.
    std::optional<double> predicted_delta_sub_index;
    std::optional<double> predicted_delta_afsi;
    PerturbationOutcome outcome;
};

/// Throws LookupError for an unknown indicator or year and
/// ZeroDispersionError when the baseline cannot be normalized.
WhatIfResult whatif(const Panel& panel, std::span<const IndicatorSpec> registry,
                    const IndexConfig& config, std::string_view indicator_id, int year,
                    double delta);

struct Sensitivity {
    std::string indicator_id;
    SectorId sector = SectorId::RS;
    /// d AFSI / d raw value under frozen normalization.
    double derivative = 0.0;
};

/// Frozen-stats derivative of AFSI for every indicator, sorted by magnitude
/// descending, ties by indicator_id ascending. The derivative does not depend
/// on the year; `year` is checked to exist. Requires normalize_first.
std::vector<Sensitivity> sensitivity_rank(const Panel& panel,
                                          std::span<const IndicatorSpec> registry,
                                          const IndexConfig& config, int year);

enum class Direction { down = -1, flat = 0, up = 1 };

char direction_symbol(Direction d) noexcept;

/// Series labels in output order: the four sectors then the composite.
inline constexpr std::array<std::string_view, 5> kSeriesLabels{"RS", "FS", "ES", "MS", "AFSI"};

/// Values of the series labelled kSeriesLabels[i].
const std::vector<double>& series_values(const StabilityIndexSeries& s, std::size_t i);

struct YoyRow {
    int year = 0;  // the later year of the pair
    std::array<Direction, 5> directions{};
};

/// Sign of value(t) - value(t-1) for every consecutive pair and series.
std::vector<YoyRow> yoy_direction(const StabilityIndexSeries& series);

enum class FlagSeverity { watch, alert };

std::string_view to_string(FlagSeverity s) noexcept;

struct WarningFlag {
    std::string series_label;
    int year = 0;
    FlagSeverity severity = FlagSeverity::watch;
    std::string trigger;
};

inline constexpr double kDefaultWatchK = 1.0;
inline constexpr double kDefaultAlertK = 1.5;

/// Flags years whose value falls below mean - k * std of the series' own
/// history. Both thresholds are checked independently, so with
/// watch_k <= alert_k every alert year also carries a watch flag. Returns no
/// flags for fewer than 3 years.
std::vector<WarningFlag> warning_flags(const StabilityIndexSeries& series, StdMode mode,
                                       double watch_k = kDefaultWatchK,
                                       double alert_k = kDefaultAlertK);

}  // namespace afsi
