#include "afsi/aggregation.hpp"

#include <string>

namespace afsi {

namespace {

std::vector<const IndicatorSpec*> sector_members(SectorId sector,
                                                 std::span<const IndicatorSpec> registry) {
    std::vector<const IndicatorSpec*> members;
    for (const auto* spec : canonical_order(registry)) {
        if (spec->sector == sector) members.push_back(spec);
    }
    if (members.empty()) {
        throw LookupError("sector " + std::string(to_string(sector)) + " has no indicators");
    }
    return members;
}

double sector_total(SectorId sector, std::span<const IndicatorSpec> registry) {
    double total = 0.0;
    for (const auto* spec : canonical_order(registry)) {
        if (spec->sector == sector) total += spec->within_weight;
    }
    return total;
}

}  // namespace

double effective_within_weight(const IndicatorSpec& spec, std::span<const IndicatorSpec> registry,
                               const IndexConfig& config) {
    if (config.weighting_mode == WeightingMode::sector) return spec.within_weight;
    return spec.within_weight / sector_total(spec.sector, registry);
}

SectorWeights effective_sector_weights(std::span<const IndicatorSpec> registry,
                                       const IndexConfig& config) {
    if (config.weighting_mode == WeightingMode::sector) return config.sector_weights;
    SectorWeights weights{};
    for (SectorId s : kAllSectors) weights[sector_index(s)] = sector_total(s, registry);
    return weights;
}

SectorIndexSeries sub_index(SectorId sector, const NormalizedPanel& normalized,
                            std::span<const IndicatorSpec> registry, const IndexConfig& config) {
    SectorIndexSeries out{sector, normalized.years, std::vector<double>(normalized.years.size())};
    for (const auto* spec : sector_members(sector, registry)) {
        const auto& column = normalized.column(spec->indicator_id);
        if (column.size() != out.values.size()) {
            throw AxisMismatchError("column length mismatch for " + spec->indicator_id);
        }
        const double w = effective_within_weight(*spec, registry, config);
        for (std::size_t t = 0; t < column.size(); ++t) out.values[t] += w * column[t];
    }
    return out;
}

SectorIndexSeries standardized_sub_index(SectorId sector, const Panel& panel,
                                         std::span<const IndicatorSpec> registry,
                                         const IndexConfig& config) {
    // Both schemes ignore a constant shift of the sum, so each indicator is
    // centred first; summing raw levels would cancel away the small spreads.
    std::vector<double> summed(panel.years().size());
    for (const auto* spec : sector_members(sector, registry)) {
        const auto raw = panel.series(spec->indicator_id);
        const auto stats = summary_stats(raw, config.std_mode, spec->indicator_id);
        const double w = effective_within_weight(*spec, registry, config) *
                         polarity_sign(spec->polarity);
        for (std::size_t t = 0; t < raw.size(); ++t) {
            summed[t] += w * ((raw[t] - stats.mean) - stats.mean_residual);
        }
    }

    const std::string subject(to_string(sector));
    SectorIndexSeries out{sector, panel.years(), {}};
    if (config.normalization == Normalization::zscore) {
        out.values = zscore(summed, summary_stats(summed, config.std_mode, subject));
    } else {
        out.values = minmax(summed, subject);
    }
    return out;
}

StabilityIndexSeries composite_afsi(const std::array<SectorIndexSeries, 4>& sub_indices,
                                    const SectorWeights& weights) {
    const auto& years = sub_indices.front().years;
    for (SectorId s : kAllSectors) {
        const auto& series = sub_indices[sector_index(s)];
        if (series.sector != s) {
            throw AxisMismatchError("sub-index slot " + std::string(to_string(s)) + " holds " +
                                    std::string(to_string(series.sector)));
        }
        if (series.years != years || series.values.size() != years.size()) {
            throw AxisMismatchError("year axis of " + std::string(to_string(s)) +
                                    " differs from RS");
        }
    }

    StabilityIndexSeries out;
    out.years = years;
    out.sectors = sub_indices;
    out.afsi.assign(years.size(), 0.0);
    for (std::size_t t = 0; t < years.size(); ++t) {
        double acc = 0.0;
        for (SectorId s : kAllSectors) {
            acc += weights[sector_index(s)] * sub_indices[sector_index(s)].values[t];
        }
        out.afsi[t] = acc;
    }
    return out;
}

StabilityIndexSeries compute_with_scaling(const Panel& panel,
                                          std::span<const IndicatorSpec> registry,
                                          const IndexConfig& config,
                                          const ScalingTable& scaling) {
    const auto normalized = apply_scaling(panel, registry, config, scaling);
    std::array<SectorIndexSeries, 4> subs;
    for (SectorId s : kAllSectors) {
        subs[sector_index(s)] = sub_index(s, normalized, registry, config);
    }
    return composite_afsi(subs, effective_sector_weights(registry, config));
}

StabilityIndexSeries compute_indices(const Panel& panel, std::span<const IndicatorSpec> registry,
                                     const IndexConfig& config) {
    if (config.aggregation_order == AggregationOrder::normalize_first) {
        return compute_with_scaling(panel, registry, config,
                                    fit_scaling(panel, registry, config));
    }
    std::array<SectorIndexSeries, 4> subs;
    for (SectorId s : kAllSectors) {
        subs[sector_index(s)] = standardized_sub_index(s, panel, registry, config);
    }
    return composite_afsi(subs, effective_sector_weights(registry, config));
}

StabilityIndexSeries run_pipeline(const Panel& panel, std::span<const IndicatorSpec> registry,
                                  const IndexConfig& config) {
    if (auto report = validate_registry(registry, config); !report.ok()) {
        throw ValidationError(std::move(report));
    }
    if (auto report = validate_panel(panel, registry); !report.ok()) {
        throw ValidationError(std::move(report));
    }
    return compute_indices(panel, registry, config);
}

}  // namespace afsi
