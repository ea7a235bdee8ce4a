#include "afsi/core_model.hpp"

#include "afsi/text.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace afsi {

namespace {

template <class Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<std::string_view, Enum>, N>& table,
                           std::string_view token) noexcept {
    for (const auto& [name, value] : table) {
        if (name == token) return value;
    }
    return std::nullopt;
}

template <class Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<std::string_view, Enum>, N>& table,
                         Enum value) noexcept {
    for (const auto& [name, v] : table) {
        if (v == value) return name;
    }
    return "?";
}

constexpr std::array<std::pair<std::string_view, SectorId>, 4> kSectorNames{{
    {"RS", SectorId::RS}, {"FS", SectorId::FS}, {"ES", SectorId::ES}, {"MS", SectorId::MS}}};
constexpr std::array<std::pair<std::string_view, Polarity>, 2> kPolarityNames{{
    {"positive", Polarity::positive}, {"negative", Polarity::negative}}};
constexpr std::array<std::pair<std::string_view, Units>, 2> kUnitsNames{{
    {"fraction", Units::fraction}, {"index_level", Units::index_level}}};
constexpr std::array<std::pair<std::string_view, WeightingMode>, 2> kWeightingNames{{
    {"sector", WeightingMode::sector}, {"flat", WeightingMode::flat}}};
constexpr std::array<std::pair<std::string_view, AggregationOrder>, 2> kOrderNames{{
    {"normalize_first", AggregationOrder::normalize_first},
    {"standardize_after", AggregationOrder::standardize_after}}};
constexpr std::array<std::pair<std::string_view, Normalization>, 2> kNormalizationNames{{
    {"zscore", Normalization::zscore}, {"minmax", Normalization::minmax}}};
constexpr std::array<std::pair<std::string_view, StdMode>, 2> kStdModeNames{{
    {"sample", StdMode::sample}, {"population", StdMode::population}}};

struct ReferenceRow {
    const char* id;
    SectorId sector;
    Polarity polarity;
    Units units;
    const char* name;
};

// Reference taxonomy. CR (call money rate) and INFL are stress signals; REER is
// negative because depreciation is read as an improvement.
constexpr std::array<ReferenceRow, 19> kReferenceRows{{
    {"GDPG", SectorId::RS, Polarity::positive, Units::fraction, "GDP Growth Rate"},
    {"AP", SectorId::RS, Polarity::positive, Units::fraction, "Agricultural Production"},
    {"QIIP", SectorId::RS, Polarity::positive, Units::fraction,
     "Quantum Index of Industrial Production"},
    {"INFL", SectorId::RS, Polarity::negative, Units::fraction, "Inflation"},
    {"DCGDP", SectorId::RS, Polarity::positive, Units::fraction, "Domestic Credit to GDP"},
    {"DCG", SectorId::MS, Polarity::positive, Units::fraction, "Domestic Credit Growth"},
    {"PLR", SectorId::MS, Polarity::positive, Units::fraction, "Performing Loan Ratio"},
    {"CRAR", SectorId::MS, Polarity::positive, Units::fraction,
     "Capital to Risk-weighted Asset Ratio"},
    {"ROA", SectorId::MS, Polarity::positive, Units::fraction, "Return on Assets"},
    {"CMR", SectorId::MS, Polarity::positive, Units::fraction, "Capital Market Return"},
    {"CR", SectorId::MS, Polarity::negative, Units::fraction, "Call Money Rate"},
    {"FBGDP", SectorId::FS, Polarity::positive, Units::fraction, "Fiscal Balance to GDP"},
    {"GDGDP", SectorId::FS, Polarity::negative, Units::fraction, "Government Debt to GDP"},
    {"TRGDP", SectorId::FS, Polarity::positive, Units::fraction, "Tax Revenue to GDP"},
    {"EDGDP", SectorId::ES, Polarity::negative, Units::fraction, "External Debt to GDP"},
    {"RED", SectorId::ES, Polarity::positive, Units::fraction, "Reserve to External Debt"},
    {"CABGDP", SectorId::ES, Polarity::positive, Units::fraction,
     "Current Account Balance to GDP"},
    {"REER", SectorId::ES, Polarity::negative, Units::index_level,
     "Real Effective Exchange Rate"},
    // Reference mean is -1.3347 despite the "% of GDP" label; stored as given.
    {"NIIP", SectorId::ES, Polarity::positive, Units::fraction,
     "Net International Investment Position to GDP"},
}};

}  // namespace

std::string_view to_string(SectorId s) noexcept { return name_of(kSectorNames, s); }
std::string_view to_string(Polarity p) noexcept { return name_of(kPolarityNames, p); }
std::string_view to_string(Units u) noexcept { return name_of(kUnitsNames, u); }
std::string_view to_string(WeightingMode m) noexcept { return name_of(kWeightingNames, m); }
std::string_view to_string(AggregationOrder o) noexcept { return name_of(kOrderNames, o); }
std::string_view to_string(Normalization n) noexcept { return name_of(kNormalizationNames, n); }
std::string_view to_string(StdMode m) noexcept { return name_of(kStdModeNames, m); }

std::optional<SectorId> parse_sector(std::string_view t) noexcept { return lookup(kSectorNames, t); }
std::optional<Polarity> parse_polarity(std::string_view t) noexcept {
    return lookup(kPolarityNames, t);
}
std::optional<Units> parse_units(std::string_view t) noexcept { return lookup(kUnitsNames, t); }
std::optional<WeightingMode> parse_weighting_mode(std::string_view t) noexcept {
    return lookup(kWeightingNames, t);
}
std::optional<AggregationOrder> parse_aggregation_order(std::string_view t) noexcept {
    return lookup(kOrderNames, t);
}
std::optional<Normalization> parse_normalization(std::string_view t) noexcept {
    return lookup(kNormalizationNames, t);
}
std::optional<StdMode> parse_std_mode(std::string_view t) noexcept {
    return lookup(kStdModeNames, t);
}

std::string_view sector_title(SectorId s) noexcept {
    switch (s) {
    case SectorId::RS: return "Real Sector Index";
    case SectorId::FS: return "Fiscal Sector Index";
    case SectorId::ES: return "External Sector Index";
    case SectorId::MS: return "Financial and Monetary Sector Index";
    }
    return "?";
}

Registry reference_registry(WeightingMode mode) {
    std::array<int, 4> members{};
    for (const auto& row : kReferenceRows) ++members[sector_index(row.sector)];

    Registry registry;
    registry.reserve(kReferenceRows.size());
    for (const auto& row : kReferenceRows) {
        const double weight = mode == WeightingMode::flat
                                  ? 1.0 / static_cast<double>(kReferenceRows.size())
                                  : 1.0 / members[sector_index(row.sector)];
        registry.push_back({row.id, row.sector, row.polarity, weight, row.units, row.name});
    }
    return registry;
}

const IndicatorSpec* find_indicator(std::span<const IndicatorSpec> registry,
                                    std::string_view indicator_id) noexcept {
    for (const auto& spec : registry) {
        if (spec.indicator_id == indicator_id) return &spec;
    }
    return nullptr;
}

std::vector<const IndicatorSpec*> canonical_order(std::span<const IndicatorSpec> registry) {
    std::vector<const IndicatorSpec*> order;
    order.reserve(registry.size());
    for (const auto& spec : registry) order.push_back(&spec);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        return a->indicator_id < b->indicator_id;
    });
    return order;
}

// ----------------------------------------------------------------------------
// Panel

Panel::Panel(std::map<CellKey, double> cells) : cells_(std::move(cells)) {
    std::set<int> years;
    std::set<std::string> ids;
    for (const auto& [key, value] : cells_) {
        ids.insert(key.first);
        years.insert(key.second);
    }
    years_.assign(years.begin(), years.end());
    ids_.assign(ids.begin(), ids.end());
}

std::optional<double> Panel::find(std::string_view indicator_id, int year) const {
    const auto it = cells_.find(CellKey{std::string(indicator_id), year});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
}

double Panel::at(std::string_view indicator_id, int year) const {
    if (auto v = find(indicator_id, year)) return *v;
    throw LookupError("no observation for (" + std::string(indicator_id) + ", " +
                      std::to_string(year) + ")");
}

std::vector<double> Panel::series(std::string_view indicator_id) const {
    std::vector<double> out;
    out.reserve(years_.size());
    for (int year : years_) out.push_back(at(indicator_id, year));
    return out;
}

Panel Panel::with_value(std::string_view indicator_id, int year, double value) const {
    auto cells = cells_;
    cells[CellKey{std::string(indicator_id), year}] = value;
    return Panel(std::move(cells));
}

// ----------------------------------------------------------------------------
// Validation

bool ValidationReport::ok() const noexcept {
    return std::none_of(issues.begin(), issues.end(),
                        [](const Issue& i) { return i.severity == Severity::error; });
}

std::vector<std::string> ValidationReport::errors() const {
    std::vector<std::string> out;
    for (const auto& i : issues) {
        if (i.severity == Severity::error) out.push_back(i.message);
    }
    return out;
}

std::vector<std::string> ValidationReport::warnings() const {
    std::vector<std::string> out;
    for (const auto& i : issues) {
        if (i.severity == Severity::warning) out.push_back(i.message);
    }
    return out;
}

void ValidationReport::add(Severity severity, std::string message) {
    issues.push_back({severity, std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    finalize();
}

void ValidationReport::finalize() {
    std::sort(issues.begin(), issues.end());
    issues.erase(std::unique(issues.begin(), issues.end()), issues.end());
}

namespace {

std::string describe(const ValidationReport& report) {
    std::string msg = "validation failed";
    for (const auto& e : report.errors()) msg += "; " + e;
    return msg;
}

std::string sum_message(std::string_view subject, double sum) {
    return std::string(subject) + " sum to " + text::general(sum, 10) + " ≠ 1";
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(describe(report)), report_(std::move(report)) {}

ValidationReport validate_registry(std::span<const IndicatorSpec> registry,
                                   const IndexConfig& config) {
    ValidationReport report;

    double sector_sum = 0.0;
    for (SectorId s : kAllSectors) {
        const double w = config.sector_weights[sector_index(s)];
        if (!std::isfinite(w) || w < 0.0) {
            report.add(Severity::error, "negative sector weight for " + std::string(to_string(s)) +
                                            ": " + text::general(w, 10));
        }
        sector_sum += w;
    }
    if (!(std::abs(sector_sum - 1.0) <= kWeightSumTolerance)) {
        report.add(Severity::error, sum_message("sector weights", sector_sum));
    }

    if (registry.empty()) {
        report.add(Severity::error, "registry is empty");
        report.finalize();
        return report;
    }

    std::map<std::string, int> seen;
    for (const auto& spec : registry) ++seen[spec.indicator_id];
    for (const auto& [id, count] : seen) {
        if (id.empty()) report.add(Severity::error, "empty indicator_id");
        else if (count > 1) report.add(Severity::error, "duplicate indicator_id: " + id);
    }

    for (const auto& spec : registry) {
        if (!std::isfinite(spec.within_weight) || spec.within_weight <= 0.0) {
            report.add(Severity::error, "non-positive within_weight for " + spec.indicator_id +
                                            ": " + text::general(spec.within_weight, 10));
        }
    }

    // Sums are folded in canonical order so the report does not depend on row order.
    SectorWeights within_sums{};
    std::array<int, 4> members{};
    double total = 0.0;
    for (const auto* spec : canonical_order(registry)) {
        within_sums[sector_index(spec->sector)] += spec->within_weight;
        ++members[sector_index(spec->sector)];
        total += spec->within_weight;
    }
    for (SectorId s : kAllSectors) {
        if (members[sector_index(s)] == 0) {
            report.add(Severity::error,
                       "sector " + std::string(to_string(s)) + " has no indicators");
        }
    }

    if (config.weighting_mode == WeightingMode::sector) {
        for (SectorId s : kAllSectors) {
            const double sum = within_sums[sector_index(s)];
            if (members[sector_index(s)] > 0 && !(std::abs(sum - 1.0) <= kWeightSumTolerance)) {
                report.add(Severity::error,
                           sum_message("within-weights of " + std::string(to_string(s)), sum));
            }
        }
    } else if (!(std::abs(total - 1.0) <= kWeightSumTolerance)) {
        report.add(Severity::error, sum_message("within-weights across all indicators", total));
    }

    report.finalize();
    return report;
}

ValidationReport validate_panel(const Panel& panel, std::span<const IndicatorSpec> registry) {
    ValidationReport report;

    if (panel.size() == 0) {
        report.add(Severity::error, "panel has no observations");
        report.finalize();
        return report;
    }

    for (const auto& id : panel.indicator_ids()) {
        if (find_indicator(registry, id) == nullptr) {
            report.add(Severity::error, "unknown indicator: " + id);
        }
    }

    const auto& years = panel.years();
    if (years.size() < 2) report.add(Severity::error, "fewer than 2 years");
    for (std::size_t i = 1; i < years.size(); ++i) {
        if (years[i] - years[i - 1] != 1) {
            report.add(Severity::error, "year gap after " + std::to_string(years[i - 1]));
        }
    }

    for (const auto& spec : registry) {
        const auto& id = spec.indicator_id;
        if (!std::binary_search(panel.indicator_ids().begin(), panel.indicator_ids().end(), id)) {
            report.add(Severity::error, "missing indicator: " + id);
            continue;
        }
        bool complete = true;
        for (int year : years) {
            if (!panel.find(id, year)) {
                report.add(Severity::error,
                           "missing cell (" + id + ", " + std::to_string(year) + ")");
                complete = false;
            }
        }
        if (complete && years.size() >= 2) {
            const auto values = panel.series(id);
            const bool constant = std::all_of(values.begin(), values.end(),
                                              [&](double v) { return v == values.front(); });
            if (constant) report.add(Severity::warning, "zero dispersion: " + id);
        }
    }

    report.finalize();
    return report;
}

}  // namespace afsi
