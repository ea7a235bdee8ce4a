#include "oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace afsi::oracle {

namespace {

struct Row {
    std::string id;
    int sector = 0;
    double sign = 1.0;
    double weight = 0.0;
};

std::vector<std::vector<std::string>> rows_of(const std::string& csv) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(fields);
    }
    return rows;
}

int sector_number(const std::string& s) {
    if (s == "RS") return 0;
    if (s == "FS") return 1;
    if (s == "ES") return 2;
    if (s == "MS") return 3;
    throw std::runtime_error("oracle: bad sector " + s);
}

// Standardize with explicitly written-out formulas, in extended precision.
template <class Real>
std::vector<double> standardize(const std::vector<Real>& x, const Settings& s) {
    const std::size_t n = x.size();
    std::vector<double> out(n);
    if (s.minmax) {
        long double lo = x[0], hi = x[0];
        for (long double v : x) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>((x[i] - lo) / (hi - lo));
        return out;
    }
    long double mean = 0.0L;
    for (long double v : x) mean += v;
    mean /= static_cast<long double>(n);
    long double ss = 0.0L;
    for (long double v : x) ss += (v - mean) * (v - mean);
    const long double var = ss / static_cast<long double>(s.population ? n : n - 1);
    const long double sd = std::sqrt(var);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>((x[i] - mean) / sd);
    return out;
}

}  // namespace

Result recompute(const std::string& panel_csv, const std::string& registry_csv,
                 const Settings& settings) {
    std::vector<Row> registry;
    for (const auto& f : rows_of(registry_csv)) {
        registry.push_back({f.at(0), sector_number(f.at(1)), f.at(2) == "negative" ? -1.0 : 1.0,
                            std::strtod(f.at(3).c_str(), nullptr)});
    }

    std::map<std::string, std::map<int, double>> raw;
    for (const auto& f : rows_of(panel_csv)) {
        raw[f.at(1)][std::atoi(f.at(0).c_str())] = std::strtod(f.at(2).c_str(), nullptr);
    }

    Result r;
    for (const auto& [year, v] : raw.begin()->second) r.years.push_back(year);
    const std::size_t T = r.years.size();

    std::array<double, 4> sector_total{};
    for (const auto& row : registry) sector_total[row.sector] += row.weight;

    std::array<double, 4> composite_weight = settings.sector_weights;
    if (settings.flat) composite_weight = sector_total;

    auto series_of = [&](const Row& row) {
        std::vector<double> x;
        for (int y : r.years) x.push_back(raw.at(row.id).at(y));
        return x;
    };
    auto within = [&](const Row& row) {
        return settings.flat ? row.weight / sector_total[row.sector] : row.weight;
    };

    r.afsi.assign(T, 0.0);
    for (int s = 0; s < 4; ++s) r.sectors[s].assign(T, 0.0);

    if (!settings.standardize_after) {
        for (const auto& row : registry) {
            auto z = standardize(series_of(row), settings);
            for (std::size_t t = 0; t < T; ++t) {
                if (row.sign < 0) z[t] = settings.minmax ? 1.0 - z[t] : -z[t];
                r.sectors[row.sector][t] += within(row) * z[t];
                if (settings.flat) r.afsi[t] += row.weight * z[t];
            }
        }
    } else {
        std::array<std::vector<long double>, 4> sums;
        for (auto& s : sums) s.assign(T, 0.0L);
        for (const auto& row : registry) {
            const auto x = series_of(row);
            for (std::size_t t = 0; t < T; ++t) {
                sums[row.sector][t] += static_cast<long double>(within(row)) * row.sign * x[t];
            }
        }
        for (int s = 0; s < 4; ++s) r.sectors[s] = standardize(sums[s], settings);
    }

    if (!settings.flat || settings.standardize_after) {
        for (std::size_t t = 0; t < T; ++t) {
            for (int s = 0; s < 4; ++s) r.afsi[t] += composite_weight[s] * r.sectors[s][t];
        }
    }
    return r;
}

}  // namespace afsi::oracle
