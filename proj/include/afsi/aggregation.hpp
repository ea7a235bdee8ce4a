#pragma once

#include "afsi/core_model.hpp"
#include "afsi/normalization.hpp"

#include <array>
#include <vector>

namespace afsi {

struct SectorIndexSeries {
    SectorId sector = SectorId::RS;
    std::vector<int> years;
    std::vector<double> values;
};

/// Composite index plus its four constituents (indexed by sector_index()).
struct StabilityIndexSeries {
    std::vector<int> years;
    std::array<SectorIndexSeries, 4> sectors;
    std::vector<double> afsi;

    const SectorIndexSeries& sector(SectorId s) const { return sectors[sector_index(s)]; }
};

/// Weight of an indicator inside its sector: the declared within_weight in
/// sector mode, the flat weight rescaled to the sector's total in flat mode.
double effective_within_weight(const IndicatorSpec& spec, std::span<const IndicatorSpec> registry,
                               const IndexConfig& config);

/// Sector weights used by the composite: the configured weights in sector
/// mode, the sector's share of flat weight (n_s/19 for the reference
/// registry) in flat mode.
SectorWeights effective_sector_weights(std::span<const IndicatorSpec> registry,
                                       const IndexConfig& config);

/// Weighted sum of already-normalized indicators of one sector.
SectorIndexSeries sub_index(SectorId sector, const NormalizedPanel& normalized,
                            std::span<const IndicatorSpec> registry, const IndexConfig& config);

/// Sums polarity-signed raw values with their weights, then standardizes the
/// summed series with the configured scheme. Throws ZeroDispersionError
/// naming the sector when the sum is constant.
SectorIndexSeries standardized_sub_index(SectorId sector, const Panel& panel,
                                         std::span<const IndicatorSpec> registry,
                                         const IndexConfig& config);

/// Combines the four sub-indices (RS, FS, ES, MS order) as a left fold
/// starting from 0 in that order. Throws AxisMismatchError when year axes
/// differ or sectors are out of order.
StabilityIndexSeries composite_afsi(const std::array<SectorIndexSeries, 4>& sub_indices,
                                    const SectorWeights& weights);

/// Sub-indices and composite for a normalize_first configuration with a
/// given (possibly frozen) scaling. Performs no validation.
StabilityIndexSeries compute_with_scaling(const Panel& panel,
                                          std::span<const IndicatorSpec> registry,
                                          const IndexConfig& config, const ScalingTable& scaling);

/// Sub-indices and composite, dispatching on the aggregation order. Performs
/// no validation.
StabilityIndexSeries compute_indices(const Panel& panel, std::span<const IndicatorSpec> registry,
                                     const IndexConfig& config);

/// validate_registry, validate_panel, then compute_indices. Throws
/// ValidationError with the first failing report; computation errors
/// propagate unchanged.
StabilityIndexSeries run_pipeline(const Panel& panel, std::span<const IndicatorSpec> registry,
                                  const IndexConfig& config);

}  // namespace afsi
