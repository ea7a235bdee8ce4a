#include "afsi/ingestion.hpp"

#include "afsi/text.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace afsi {

namespace {

std::string format_parse_error(const std::string& role, int line, const std::string& column,
                               const std::string& message) {
    std::string out = role;
    if (line > 0) out += ":" + std::to_string(line);
    out += ": ";
    if (!column.empty()) out += "column '" + column + "': ";
    return out + message;
}

/// Lines after the header that carry data; blank lines are skipped but keep
/// their physical numbering.
template <class RowFn>
void for_each_row(std::string_view text, std::string_view role, std::string_view header,
                  std::size_t field_count, RowFn&& on_row) {
    const auto lines = text::lines(text);
    const std::string role_s(role);
    if (lines.empty() || lines.front() != header) {
        throw ParseError(role_s, 1, "", "malformed header, expected '" + std::string(header) + "'");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        if (lines[i].empty()) continue;
        const auto fields = text::split(lines[i], ',');
        if (fields.size() != field_count) {
            throw ParseError(role_s, line_no, "",
                             "expected " + std::to_string(field_count) + " fields, found " +
                                 std::to_string(fields.size()));
        }
        on_row(line_no, fields);
    }
}

}  // namespace

ParseError::ParseError(std::string role, int line, std::string column, std::string message)
    : Error(format_parse_error(role, line, column, message)),
      role_(std::move(role)),
      line_(line),
      column_(std::move(column)),
      message_(std::move(message)) {}

Panel parse_panel_csv(std::string_view text, std::string_view role) {
    const std::string role_s(role);
    std::map<CellKey, double> cells;
    for_each_row(text, role, kPanelHeader, 3, [&](int line_no, const auto& fields) {
        int year = 0;
        if (!text::parse_int(fields[0], year)) {
            throw ParseError(role_s, line_no, "fiscal_year",
                             "non-integer year '" + std::string(fields[0]) + "'");
        }
        if (fields[1].empty()) {
            throw ParseError(role_s, line_no, "indicator_id", "empty indicator_id");
        }
        double value = 0.0;
        if (!text::parse_double(fields[2], value)) {
            throw ParseError(role_s, line_no, "value",
                             "non-numeric value '" + std::string(fields[2]) + "'");
        }
        const bool inserted = cells.emplace(CellKey{std::string(fields[1]), year}, value).second;
        if (!inserted) {
            throw ParseError(role_s, line_no, "",
                             "duplicate cell (" + std::to_string(year) + ", " +
                                 std::string(fields[1]) + ")");
        }
    });
    return Panel(std::move(cells));
}

Registry parse_indicator_registry(std::string_view text, std::string_view role) {
    const std::string role_s(role);
    Registry registry;
    for_each_row(text, role, kRegistryHeader, 6, [&](int line_no, const auto& fields) {
        IndicatorSpec spec;
        spec.indicator_id = std::string(fields[0]);
        if (spec.indicator_id.empty()) {
            throw ParseError(role_s, line_no, "indicator_id", "empty indicator_id");
        }
        const auto sector = parse_sector(fields[1]);
        if (!sector) {
            throw ParseError(role_s, line_no, "sector",
                             "unknown sector '" + std::string(fields[1]) + "'");
        }
        const auto polarity = parse_polarity(fields[2]);
        if (!polarity) {
            throw ParseError(role_s, line_no, "polarity",
                             "unknown polarity '" + std::string(fields[2]) + "'");
        }
        if (!text::parse_double(fields[3], spec.within_weight)) {
            throw ParseError(role_s, line_no, "within_weight",
                             "non-numeric weight '" + std::string(fields[3]) + "'");
        }
        const auto units = parse_units(fields[4]);
        if (!units) {
            throw ParseError(role_s, line_no, "units",
                             "unknown units '" + std::string(fields[4]) + "'");
        }
        spec.sector = *sector;
        spec.polarity = *polarity;
        spec.units = *units;
        spec.display_name = std::string(fields[5]);
        registry.push_back(std::move(spec));
    });
    return registry;
}

IndexConfig parse_settings(std::string_view text, std::string_view role) {
    const std::string role_s(role);
    IndexConfig config;
    std::set<std::string, std::less<>> seen;

    const auto lines = text::lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto line = lines[i];
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = text::trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(role_s, line_no, "", "expected key=value");
        }
        const auto key = text::trim(line.substr(0, eq));
        const auto value = text::trim(line.substr(eq + 1));
        const std::string key_s(key);
        if (!seen.insert(key_s).second) {
            throw ParseError(role_s, line_no, key_s, "duplicate key");
        }

        auto bad_value = [&](std::string_view what) {
            return ParseError(role_s, line_no, key_s,
                              std::string(what) + " '" + std::string(value) + "'");
        };

        if (key == "weighting_mode") {
            const auto v = parse_weighting_mode(value);
            if (!v) throw bad_value("out-of-range value");
            config.weighting_mode = *v;
        } else if (key == "aggregation_order") {
            const auto v = parse_aggregation_order(value);
            if (!v) throw bad_value("out-of-range value");
            config.aggregation_order = *v;
        } else if (key == "normalization") {
            const auto v = parse_normalization(value);
            if (!v) throw bad_value("out-of-range value");
            config.normalization = *v;
        } else if (key == "std_mode") {
            const auto v = parse_std_mode(value);
            if (!v) throw bad_value("out-of-range value");
            config.std_mode = *v;
        } else if (key.starts_with("sector_weight.")) {
            const auto sector = parse_sector(key.substr(std::string_view("sector_weight.").size()));
            if (!sector) throw ParseError(role_s, line_no, key_s, "unknown key");
            double w = 0.0;
            if (!text::parse_double(value, w)) throw bad_value("unparseable value");
            config.sector_weights[sector_index(*sector)] = w;
        } else {
            throw ParseError(role_s, line_no, key_s, "unknown key");
        }
    }
    return config;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "", "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace afsi
