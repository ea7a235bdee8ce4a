#pragma once

#include "afsi/core_model.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace afsi {

/// Mean and dispersion of one indicator over the sample window.
struct SummaryStats {
    std::string indicator_id;
    double mean = 0.0;
    double std = 0.0;
    int n = 0;
    double mean_residual = 0.0;  // true mean minus `mean`, recovered by a second pass
};

/// Arithmetic mean and standard deviation (divisor n-1 for sample, n for
/// population). Summation runs front to back. Throws DegenerateInputError
/// when fewer than two observations are given.
SummaryStats summary_stats(std::span<const double> series, StdMode mode,
                           std::string indicator_id = {});

/// (v - mean) / std. Throws ZeroDispersionError when std is zero.
std::vector<double> zscore(std::span<const double> series, const SummaryStats& stats);

/// (v - min) / (max - min). Throws ZeroDispersionError when max == min.
std::vector<double> minmax(std::span<const double> series, const std::string& subject = {});

/// Negative polarity negates z-scores and reflects min-max scores (v -> 1 - v).
std::vector<double> apply_polarity(std::span<const double> series, Polarity polarity,
                                   Normalization scheme = Normalization::zscore);

/// Affine map fitted on the baseline sample: z = (v - center) / scale, with
/// (center, scale) = (mean, std) for z-scores and (min, max - min) for min-max.
/// Holding a Scaling fixed while perturbing raw data is what "frozen stats"
/// means for what-if analysis.
/// value -> ((value - center) - center_residual) / scale
struct Scaling {
    double center = 0.0;
    double scale = 1.0;
    double center_residual = 0.0;
};

using ScalingTable = std::map<std::string, Scaling, std::less<>>;

/// Standardized, polarity-adjusted indicator columns on the panel's year axis.
struct NormalizedPanel {
    std::vector<int> years;
    std::map<std::string, std::vector<double>, std::less<>> columns;

    /// Throws LookupError when the indicator is absent.
    const std::vector<double>& column(std::string_view indicator_id) const;
};

/// Per-indicator scaling over the full sample. Throws ZeroDispersionError
/// naming the first (by id) indicator without spread.
ScalingTable fit_scaling(const Panel& panel, std::span<const IndicatorSpec> registry,
                         const IndexConfig& config);

/// Applies a previously fitted (possibly frozen) scaling, then polarity.
NormalizedPanel apply_scaling(const Panel& panel, std::span<const IndicatorSpec> registry,
                              const IndexConfig& config, const ScalingTable& scaling);

/// fit_scaling followed by apply_scaling.
NormalizedPanel normalize_panel(const Panel& panel, std::span<const IndicatorSpec> registry,
                                const IndexConfig& config);

/// Summary statistics for every registry indicator, in registry order. Does
/// not reject zero-dispersion indicators.
std::vector<SummaryStats> panel_summary(const Panel& panel,
                                        std::span<const IndicatorSpec> registry, StdMode mode);

}  // namespace afsi
