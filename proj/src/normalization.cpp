#include "afsi/normalization.hpp"

#include <algorithm>
#include <cmath>

namespace afsi {

namespace {

double affine(double v, const Scaling& s) { return ((v - s.center) - s.center_residual) / s.scale; }

Scaling fit_one(std::span<const double> series, const IndexConfig& config,
                const std::string& id) {
    if (config.normalization == Normalization::zscore) {
        const auto stats = summary_stats(series, config.std_mode, id);
        if (stats.std == 0.0) throw ZeroDispersionError(id);
        return {stats.mean, stats.std, stats.mean_residual};
    }
    if (series.empty()) throw DegenerateInputError("empty series: " + id);
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    if (*hi == *lo) throw ZeroDispersionError(id);
    return {*lo, *hi - *lo};
}

}  // namespace

SummaryStats summary_stats(std::span<const double> series, StdMode mode,
                           std::string indicator_id) {
    const auto n = series.size();
    if (n < 2) {
        throw DegenerateInputError("at least 2 observations required" +
                                   (indicator_id.empty() ? "" : " for " + indicator_id));
    }
    double sum = 0.0;
    for (double v : series) sum += v;
    const double mean = sum / static_cast<double>(n);

    // The deviations from the rounded mean are nearly exact, so their average
    // recovers what the rounding lost. Matters when |mean| >> std.
    double residual = 0.0;
    for (double v : series) residual += v - mean;
    residual /= static_cast<double>(n);

    double ss = 0.0;
    for (double v : series) {
        const double d = (v - mean) - residual;
        ss += d * d;
    }
    const double divisor = mode == StdMode::sample ? static_cast<double>(n - 1)
                                                   : static_cast<double>(n);
    return {std::move(indicator_id), mean, std::sqrt(ss / divisor), static_cast<int>(n), residual};
}

std::vector<double> zscore(std::span<const double> series, const SummaryStats& stats) {
    if (stats.std == 0.0) throw ZeroDispersionError(stats.indicator_id);
    const Scaling s{stats.mean, stats.std, stats.mean_residual};
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back(affine(v, s));
    return out;
}

std::vector<double> minmax(std::span<const double> series, const std::string& subject) {
    if (series.empty()) throw DegenerateInputError("empty series");
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    if (*hi == *lo) throw ZeroDispersionError(subject);
    const Scaling s{*lo, *hi - *lo};
    std::vector<double> out;
    out.reserve(series.size());
    for (double v : series) out.push_back(affine(v, s));
    return out;
}

std::vector<double> apply_polarity(std::span<const double> series, Polarity polarity,
                                   Normalization scheme) {
    std::vector<double> out(series.begin(), series.end());
    if (polarity == Polarity::positive) return out;
    for (double& v : out) v = scheme == Normalization::zscore ? -v : 1.0 - v;
    return out;
}

const std::vector<double>& NormalizedPanel::column(std::string_view indicator_id) const {
    const auto it = columns.find(indicator_id);
    if (it == columns.end()) {
        throw LookupError("indicator not in normalized panel: " + std::string(indicator_id));
    }
    return it->second;
}

ScalingTable fit_scaling(const Panel& panel, std::span<const IndicatorSpec> registry,
                         const IndexConfig& config) {
    ScalingTable table;
    for (const auto* spec : canonical_order(registry)) {
        const auto series = panel.series(spec->indicator_id);
        table.emplace(spec->indicator_id, fit_one(series, config, spec->indicator_id));
    }
    return table;
}

NormalizedPanel apply_scaling(const Panel& panel, std::span<const IndicatorSpec> registry,
                              const IndexConfig& config, const ScalingTable& scaling) {
    NormalizedPanel out;
    out.years = panel.years();
    for (const auto& spec : registry) {
        const auto it = scaling.find(spec.indicator_id);
        if (it == scaling.end()) {
            throw LookupError("no scaling for indicator " + spec.indicator_id);
        }
        auto column = panel.series(spec.indicator_id);
        for (double& v : column) v = affine(v, it->second);
        out.columns.emplace(spec.indicator_id,
                            apply_polarity(column, spec.polarity, config.normalization));
    }
    return out;
}

NormalizedPanel normalize_panel(const Panel& panel, std::span<const IndicatorSpec> registry,
                                const IndexConfig& config) {
    return apply_scaling(panel, registry, config, fit_scaling(panel, registry, config));
}

std::vector<SummaryStats> panel_summary(const Panel& panel,
                                        std::span<const IndicatorSpec> registry, StdMode mode) {
    std::vector<SummaryStats> out;
    out.reserve(registry.size());
    for (const auto& spec : registry) {
        out.push_back(summary_stats(panel.series(spec.indicator_id), mode, spec.indicator_id));
    }
    return out;
}

}  // namespace afsi
