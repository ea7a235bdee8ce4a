#pragma once

#include "afsi/errors.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace afsi {

// ============================================================================
// Enumerations
// ============================================================================

/// The four sectors of the composite index, in the order used for every
/// per-sector array and for the composite fold.
enum class SectorId { RS, FS, ES, MS };

inline constexpr std::array<SectorId, 4> kAllSectors{SectorId::RS, SectorId::FS, SectorId::ES,
                                                     SectorId::MS};

constexpr std::size_t sector_index(SectorId s) noexcept { return static_cast<std::size_t>(s); }

/// Positive: a higher raw value improves stability.
enum class Polarity { positive, negative };

enum class Units { fraction, index_level };

enum class WeightingMode { sector, flat };
enum class AggregationOrder { normalize_first, standardize_after };
enum class Normalization { zscore, minmax };
enum class StdMode { sample, population };

std::string_view to_string(SectorId s) noexcept;
std::string_view to_string(Polarity p) noexcept;
std::string_view to_string(Units u) noexcept;
std::string_view to_string(WeightingMode m) noexcept;
std::string_view to_string(AggregationOrder o) noexcept;
std::string_view to_string(Normalization n) noexcept;
std::string_view to_string(StdMode m) noexcept;

std::optional<SectorId> parse_sector(std::string_view token) noexcept;
std::optional<Polarity> parse_polarity(std::string_view token) noexcept;
std::optional<Units> parse_units(std::string_view token) noexcept;
std::optional<WeightingMode> parse_weighting_mode(std::string_view token) noexcept;
std::optional<AggregationOrder> parse_aggregation_order(std::string_view token) noexcept;
std::optional<Normalization> parse_normalization(std::string_view token) noexcept;
std::optional<StdMode> parse_std_mode(std::string_view token) noexcept;

/// Human-readable sector title, e.g. "Real Sector Index".
std::string_view sector_title(SectorId s) noexcept;

constexpr double polarity_sign(Polarity p) noexcept { return p == Polarity::positive ? 1.0 : -1.0; }

// ============================================================================
// Registry and configuration
// ============================================================================

struct IndicatorSpec {
    std::string indicator_id;
    SectorId sector = SectorId::RS;
    Polarity polarity = Polarity::positive;
    double within_weight = 0.0;
    Units units = Units::fraction;
    std::string display_name;

    bool operator==(const IndicatorSpec&) const = default;
};

using Registry = std::vector<IndicatorSpec>;

/// Per-sector weights indexed by sector_index().
using SectorWeights = std::array<double, 4>;

inline constexpr SectorWeights kDefaultSectorWeights{0.15, 0.15, 0.30, 0.40};

struct IndexConfig {
    SectorWeights sector_weights = kDefaultSectorWeights;
    WeightingMode weighting_mode = WeightingMode::sector;
    AggregationOrder aggregation_order = AggregationOrder::normalize_first;
    Normalization normalization = Normalization::zscore;
    StdMode std_mode = StdMode::sample;

    bool operator==(const IndexConfig&) const = default;
};

/// The 19-indicator taxonomy with its default polarities. Within-weights are
/// 1/19 each in flat mode and 1/n_s (uniform inside each sector) in sector mode.
Registry reference_registry(WeightingMode mode);

/// Looks up an indicator by id; nullptr when absent.
const IndicatorSpec* find_indicator(std::span<const IndicatorSpec> registry,
                                    std::string_view indicator_id) noexcept;

/// Registry rows sorted by indicator_id. Every fold over indicators uses this
/// order so results do not depend on the order of the input file.
std::vector<const IndicatorSpec*> canonical_order(std::span<const IndicatorSpec> registry);

// ============================================================================
// Panel
// ============================================================================

using CellKey = std::pair<std::string, int>;  // (indicator_id, fiscal_year)

/// Indicator x fiscal-year table of raw observations. The container itself
/// accepts irregular data; rectangularity and contiguity are checked by
/// validate_panel().
class Panel {
public:
    Panel() = default;
    explicit Panel(std::map<CellKey, double> cells);

    /// Distinct fiscal years, ascending.
    const std::vector<int>& years() const noexcept { return years_; }
    /// Distinct indicator ids, ascending.
    const std::vector<std::string>& indicator_ids() const noexcept { return ids_; }
    const std::map<CellKey, double>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }

    std::optional<double> find(std::string_view indicator_id, int year) const;
    /// Throws LookupError when the cell is absent.
    double at(std::string_view indicator_id, int year) const;
    /// Values of one indicator over years(). Throws LookupError on any gap.
    std::vector<double> series(std::string_view indicator_id) const;

    /// Copy with one cell replaced (or added).
    Panel with_value(std::string_view indicator_id, int year, double value) const;

    bool operator==(const Panel& other) const { return cells_ == other.cells_; }

private:
    std::map<CellKey, double> cells_;
    std::vector<int> years_;
    std::vector<std::string> ids_;
};

// ============================================================================
// Validation
// ============================================================================

enum class Severity { error, warning };

struct Issue {
    Severity severity = Severity::error;
    std::string message;

    auto operator<=>(const Issue&) const = default;
};

/// Violations are data: validation never throws. Issues are kept sorted so two
/// reports over permuted inputs compare equal.
struct ValidationReport {
    std::vector<Issue> issues;

    bool ok() const noexcept;
    std::vector<std::string> errors() const;
    std::vector<std::string> warnings() const;
    void add(Severity severity, std::string message);
    void merge(const ValidationReport& other);
    void finalize();
};

/// Raised by the pipeline when an input fails validation.
class ValidationError : public Error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Tolerance for every weight-sum rule.
inline constexpr double kWeightSumTolerance = 1e-9;

ValidationReport validate_registry(std::span<const IndicatorSpec> registry,
                                   const IndexConfig& config);

ValidationReport validate_panel(const Panel& panel, std::span<const IndicatorSpec> registry);

}  // namespace afsi
