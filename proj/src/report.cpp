#include "afsi/report.hpp"

#include "afsi/ingestion.hpp"
#include "afsi/text.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace afsi {

std::string write_panel_csv(const Panel& panel) {
    std::vector<std::pair<int, std::string>> order;
    order.reserve(panel.size());
    for (const auto& [key, value] : panel.cells()) order.emplace_back(key.second, key.first);
    std::sort(order.begin(), order.end());

    std::string out(kPanelHeader);
    out += '\n';
    for (const auto& [year, id] : order) {
        out += std::to_string(year) + "," + id + "," + text::round_trip(panel.at(id, year)) + "\n";
    }
    return out;
}

std::string write_registry_csv(std::span<const IndicatorSpec> registry) {
    std::string out(kRegistryHeader);
    out += '\n';
    for (const auto& s : registry) {
        out += s.indicator_id + "," + std::string(to_string(s.sector)) + "," +
               std::string(to_string(s.polarity)) + "," + text::round_trip(s.within_weight) + "," +
               std::string(to_string(s.units)) + "," + s.display_name + "\n";
    }
    return out;
}

std::string write_indices_csv(const StabilityIndexSeries& series) {
    std::string out(kIndicesHeader);
    out += '\n';
    for (std::size_t t = 0; t < series.years.size(); ++t) {
        out += std::to_string(series.years[t]);
        for (std::size_t i = 0; i < kSeriesLabels.size(); ++i) {
            out += "," + text::round_trip(series_values(series, i)[t]);
        }
        out += '\n';
    }
    return out;
}

std::string write_stats_csv(std::span<const SummaryStats> stats) {
    std::string out(kStatsHeader);
    out += '\n';
    for (const auto& s : stats) {
        out += s.indicator_id + "," + text::round_trip(s.mean) + "," + text::round_trip(s.std) +
               "," + std::to_string(s.n) + "\n";
    }
    return out;
}

std::string write_flags_csv(std::span<const WarningFlag> flags) {
    std::string out(kFlagsHeader);
    out += '\n';
    for (const auto& f : flags) {
        out += f.series_label + "," + std::to_string(f.year) + "," +
               std::string(to_string(f.severity)) + "," + f.trigger + "\n";
    }
    return out;
}

std::string write_whatif_csv(const WhatIfResult& r) {
    auto optional = [](const std::optional<double>& v) {
        return v ? text::round_trip(*v) : std::string();
    };
    std::string out(kWhatIfHeader);
    out += '\n';
    out += r.indicator_id + "," + std::to_string(r.year) + "," + text::round_trip(r.delta) + "," +
           std::string(to_string(r.sector)) + "," + text::round_trip(r.delta_sub_index) + "," +
           text::round_trip(r.delta_afsi) + "," + optional(r.predicted_delta_sub_index) + "," +
           optional(r.predicted_delta_afsi) + "\n";
    return out;
}

StabilityIndexSeries read_indices_csv(std::string_view csv, std::string_view role) {
    const std::string role_s(role);
    const auto lines = text::lines(csv);
    if (lines.empty() || lines.front() != kIndicesHeader) {
        throw ParseError(role_s, 1, "", "malformed header");
    }
    StabilityIndexSeries out;
    for (SectorId s : kAllSectors) out.sectors[sector_index(s)].sector = s;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        if (lines[i].empty()) continue;
        const auto fields = text::split(lines[i], ',');
        if (fields.size() != 6) throw ParseError(role_s, line_no, "", "expected 6 fields");
        int year = 0;
        if (!text::parse_int(fields[0], year)) {
            throw ParseError(role_s, line_no, "fiscal_year", "non-integer year");
        }
        out.years.push_back(year);
        for (std::size_t k = 0; k < 5; ++k) {
            double v = 0.0;
            if (!text::parse_double(fields[k + 1], v)) {
                throw ParseError(role_s, line_no, std::string(kSeriesLabels[k]),
                                 "non-numeric value");
            }
            if (k < 4) out.sectors[k].values.push_back(v);
            else out.afsi.push_back(v);
        }
    }
    for (auto& s : out.sectors) s.years = out.years;
    return out;
}

std::string format_mean_std(const SummaryStats& stats) {
    return text::fixed(stats.mean, 4) + " (" + text::fixed(stats.std, 4) + ")";
}

// ----------------------------------------------------------------------------
// SVG

namespace {

constexpr std::array<const char*, 5> kPalette{"#1f4e79", "#c0392b", "#2e8b57", "#b8860b",
                                              "#6a3d9a"};

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v) { return text::fixed(v, 2); }

}  // namespace

std::string emit_svg(const ChartSpec& chart) {
    const std::size_t n = chart.years.size();
    if (n < 2) throw DegenerateInputError("a chart needs at least 2 data points");
    if (chart.series.empty()) throw DegenerateInputError("a chart needs at least one series");

    double lo = chart.series.front().values.empty() ? 0.0 : chart.series.front().values.front();
    double hi = lo;
    for (const auto& s : chart.series) {
        if (s.values.size() != n) {
            throw AxisMismatchError("series '" + s.label + "' does not match the year axis");
        }
        for (double v : s.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    const double span = hi - lo;
    const double pad = span > 0.0 ? 0.1 * span : std::max(0.1 * std::abs(lo), 1.0);
    lo -= pad;
    hi += pad;

    const double left = 70.0;
    const double right = chart.width - 30.0;
    const double top = 50.0;
    const double bottom = chart.height - 50.0;
    auto x_at = [&](std::size_t i) {
        return left + (right - left) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto y_at = [&](double v) { return bottom - (v - lo) / (hi - lo) * (bottom - top); };

    const std::string w = std::to_string(chart.width);
    const std::string h = std::to_string(chart.height);
    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
           "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    svg += "<title>" + xml_escape(chart.title) + "</title>\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";
    svg += "<text class=\"title\" x=\"" + num(chart.width / 2.0) +
           "\" y=\"28.00\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
           xml_escape(chart.title) + "</text>\n";

    // y grid and ticks
    constexpr int kYTicks = 5;
    for (int k = 0; k < kYTicks; ++k) {
        const double v = lo + (hi - lo) * k / (kYTicks - 1);
        const std::string y = num(y_at(v));
        svg += "<line class=\"grid\" x1=\"" + num(left) + "\" y1=\"" + y + "\" x2=\"" +
               num(right) + "\" y2=\"" + y + "\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n";
        svg += "<text class=\"y-tick\" x=\"" + num(left - 8.0) + "\" y=\"" + num(y_at(v) + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               text::fixed(v, 2) + "</text>\n";
    }
    if (lo <= 0.0 && 0.0 <= hi) {
        const std::string y = num(y_at(0.0));
        svg += "<line class=\"zero-gridline\" x1=\"" + num(left) + "\" y1=\"" + y + "\" x2=\"" +
               num(right) + "\" y2=\"" + y +
               "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    // axes
    svg += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" +
           num(right) + "\" y2=\"" + num(bottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" +
           num(left) + "\" y2=\"" + num(bottom) + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        svg += "<text class=\"x-tick\" x=\"" + num(x_at(i)) + "\" y=\"" + num(bottom + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               std::to_string(chart.years[i]) + "</text>\n";
    }

    for (std::size_t s = 0; s < chart.series.size(); ++s) {
        const auto& series = chart.series[s];
        std::string points;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) points += ' ';
            points += num(x_at(i)) + "," + num(y_at(series.values[i]));
        }
        svg += "<polyline class=\"series\" data-label=\"" + xml_escape(series.label) +
               "\" fill=\"none\" stroke=\"" + kPalette[s % kPalette.size()] +
               "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    }

    if (chart.series.size() > 1) {
        for (std::size_t s = 0; s < chart.series.size(); ++s) {
            const double y = top + 14.0 * static_cast<double>(s);
            svg += "<text class=\"legend\" x=\"" + num(right - 4.0) + "\" y=\"" + num(y) +
                   "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" +
                   kPalette[s % kPalette.size()] + "\">" + xml_escape(chart.series[s].label) +
                   "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::pair<std::string, ChartSpec>> index_charts(const StabilityIndexSeries& series) {
    auto sector_chart = [&](SectorId s) {
        return ChartSpec{std::string(sector_title(s)),
                         series.years,
                         {{std::string(to_string(s)), series.sector(s).values}}};
    };
    return {
        {"rsi.svg", sector_chart(SectorId::RS)},
        {"msi.svg", sector_chart(SectorId::MS)},
        {"fsi.svg", sector_chart(SectorId::FS)},
        {"esi.svg", sector_chart(SectorId::ES)},
        {"afsi.svg",
         ChartSpec{"Aggregate Financial Stability Index", series.years, {{"AFSI", series.afsi}}}},
    };
}

}  // namespace afsi
