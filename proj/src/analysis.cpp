#include "afsi/analysis.hpp"

#include "afsi/text.hpp"

#include <algorithm>
#include <cmath>

namespace afsi {

namespace {

const IndicatorSpec& require_indicator(std::span<const IndicatorSpec> registry,
                                       std::string_view indicator_id) {
    const auto* spec = find_indicator(registry, indicator_id);
    if (spec == nullptr) throw LookupError("unknown indicator: " + std::string(indicator_id));
    return *spec;
}

std::size_t require_year(const Panel& panel, int year) {
    const auto& years = panel.years();
    const auto it = std::find(years.begin(), years.end(), year);
    if (it == years.end()) throw LookupError("unknown year: " + std::to_string(year));
    return static_cast<std::size_t>(it - years.begin());
}

/// sector_weight * within_weight * polarity_sign / scale.
double frozen_derivative(const IndicatorSpec& spec, std::span<const IndicatorSpec> registry,
                         const IndexConfig& config, const ScalingTable& scaling,
                         double* sub_index_derivative = nullptr) {
    const double within = effective_within_weight(spec, registry, config);
    const double sector = effective_sector_weights(registry, config)[sector_index(spec.sector)];
    const double sign = polarity_sign(spec.polarity);
    const double scale = scaling.at(spec.indicator_id).scale;
    if (sub_index_derivative != nullptr) *sub_index_derivative = within * sign / scale;
    return sector * within * sign / scale;
}

}  // namespace

PerturbationOutcome apply_perturbations(const Panel& panel,
                                        std::span<const IndicatorSpec> registry,
                                        const IndexConfig& config,
                                        std::span<const Perturbation> perturbations) {
    Panel shocked = panel;
    for (const auto& p : perturbations) {
        require_indicator(registry, p.indicator_id);
        require_year(panel, p.year);
        shocked = shocked.with_value(p.indicator_id, p.year,
                                     shocked.at(p.indicator_id, p.year) + p.delta);
    }

    if (config.aggregation_order == AggregationOrder::normalize_first) {
        const auto scaling = fit_scaling(panel, registry, config);
        return {compute_with_scaling(panel, registry, config, scaling),
                compute_with_scaling(shocked, registry, config, scaling)};
    }
    return {compute_indices(panel, registry, config), compute_indices(shocked, registry, config)};
}

WhatIfResult whatif(const Panel& panel, std::span<const IndicatorSpec> registry,
                    const IndexConfig& config, std::string_view indicator_id, int year,
                    double delta) {
    const auto& spec = require_indicator(registry, indicator_id);
    const auto t = require_year(panel, year);

    const Perturbation p{spec.indicator_id, year, delta};
    WhatIfResult result;
    result.indicator_id = spec.indicator_id;
    result.year = year;
    result.delta = delta;
    result.sector = spec.sector;
    result.outcome = apply_perturbations(panel, registry, config, std::span(&p, 1));

    const auto& base = result.outcome.baseline;
    const auto& shocked = result.outcome.perturbed;
    result.delta_sub_index =
        shocked.sector(spec.sector).values[t] - base.sector(spec.sector).values[t];
    result.delta_afsi = shocked.afsi[t] - base.afsi[t];

    if (config.aggregation_order == AggregationOrder::normalize_first) {
        const auto scaling = fit_scaling(panel, registry, config);
        double d_sub = 0.0;
        const double d_afsi = frozen_derivative(spec, registry, config, scaling, &d_sub);
        result.predicted_delta_sub_index = d_sub * delta;
        result.predicted_delta_afsi = d_afsi * delta;
    }
    return result;
}

std::vector<Sensitivity> sensitivity_rank(const Panel& panel,
                                          std::span<const IndicatorSpec> registry,
                                          const IndexConfig& config, int year) {
    if (config.aggregation_order != AggregationOrder::normalize_first) {
        throw Error("sensitivity ranking requires aggregation_order=normalize_first");
    }
    require_year(panel, year);
    const auto scaling = fit_scaling(panel, registry, config);

    std::vector<Sensitivity> out;
    out.reserve(registry.size());
    for (const auto& spec : registry) {
        out.push_back({spec.indicator_id, spec.sector,
                       frozen_derivative(spec, registry, config, scaling)});
    }
    std::sort(out.begin(), out.end(), [](const Sensitivity& a, const Sensitivity& b) {
        const double ma = std::abs(a.derivative);
        const double mb = std::abs(b.derivative);
        if (ma != mb) return ma > mb;
        return a.indicator_id < b.indicator_id;
    });
    return out;
}

char direction_symbol(Direction d) noexcept {
    switch (d) {
    case Direction::down: return '-';
    case Direction::flat: return '0';
    case Direction::up: return '+';
    }
    return '?';
}

const std::vector<double>& series_values(const StabilityIndexSeries& s, std::size_t i) {
    return i < 4 ? s.sectors[i].values : s.afsi;
}

std::vector<YoyRow> yoy_direction(const StabilityIndexSeries& series) {
    std::vector<YoyRow> rows;
    for (std::size_t t = 1; t < series.years.size(); ++t) {
        YoyRow row{series.years[t], {}};
        for (std::size_t i = 0; i < kSeriesLabels.size(); ++i) {
            const auto& v = series_values(series, i);
            const double diff = v[t] - v[t - 1];
            row.directions[i] = diff > 0.0 ? Direction::up
                                : diff < 0.0 ? Direction::down
                                             : Direction::flat;
        }
        rows.push_back(row);
    }
    return rows;
}

std::string_view to_string(FlagSeverity s) noexcept {
    return s == FlagSeverity::watch ? "watch" : "alert";
}

std::vector<WarningFlag> warning_flags(const StabilityIndexSeries& series, StdMode mode,
                                       double watch_k, double alert_k) {
    std::vector<WarningFlag> flags;
    if (series.years.size() < 3) return flags;

    for (std::size_t i = 0; i < kSeriesLabels.size(); ++i) {
        const auto& values = series_values(series, i);
        const auto stats = summary_stats(values, mode, std::string(kSeriesLabels[i]));
        const double watch_line = stats.mean - watch_k * stats.std;
        const double alert_line = stats.mean - alert_k * stats.std;

        for (std::size_t t = 0; t < values.size(); ++t) {
            auto emit = [&](FlagSeverity severity, double k, double line) {
                flags.push_back({std::string(kSeriesLabels[i]), series.years[t], severity,
                                 "value " + text::fixed(values[t], 4) + " below mean - " +
                                     text::general(k, 6) + " x std (" + text::fixed(line, 4) +
                                     ")"});
            };
            if (values[t] < watch_line) emit(FlagSeverity::watch, watch_k, watch_line);
            if (values[t] < alert_line) emit(FlagSeverity::alert, alert_k, alert_line);
        }
    }
    return flags;
}

}  // namespace afsi
