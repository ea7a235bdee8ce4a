// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include "afsi/analysis.hpp"
#include "afsi/cli.hpp"
#include "afsi/ingestion.hpp"
#include "afsi/report.hpp"
#include "afsi/text.hpp"
#include "support/oracle.hpp"
#include "support/random_panel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace afsi;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d  %s  %s  (%s)\n", number, o.pass ? "PASS" : "FAIL", title,
                o.detail.c_str());
    std::fflush(stdout);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string sci(double v) { return text::general(v, 3); }

Panel shipped_panel() { return parse_panel_csv(read_text_file(testing::data_path("panel.csv"))); }

Registry shipped_registry() {
    return parse_indicator_registry(read_text_file(testing::data_path("indicators.csv")));
}

oracle::Settings oracle_settings(const IndexConfig& c) {
    return {c.weighting_mode == WeightingMode::flat,
            c.aggregation_order == AggregationOrder::standardize_after,
            c.normalization == Normalization::minmax, c.std_mode == StdMode::population,
            c.sector_weights};
}

double max_diff(const StabilityIndexSeries& a, const StabilityIndexSeries& b) {
    double worst = 0.0;
    for (std::size_t t = 0; t < a.years.size(); ++t) {
        worst = std::max(worst, std::abs(a.afsi[t] - b.afsi[t]));
        for (std::size_t s = 0; s < 4; ++s) {
            worst = std::max(worst, std::abs(a.sectors[s].values[t] - b.sectors[s].values[t]));
        }
    }
    return worst;
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        files[entry.path().filename().string()] = read_text_file(entry.path().string());
    }
    return files;
}

struct TableRow {
    const char* id;
    const char* expected;
};

// Published per-indicator mean (std) over FY2016-FY2024.
constexpr TableRow kTable[] = {
    {"GDPG", "0.0652 (0.0131)"},   {"AP", "0.0297 (0.0321)"},     {"QIIP", "0.0857 (0.0567)"},
    {"INFL", "0.0680 (0.0178)"},   {"DCGDP", "0.4038 (0.0177)"},  {"DCG", "0.1307 (0.0231)"},
    {"PLR", "0.8986 (0.0135)"},    {"CRAR", "0.1112 (0.0047)"},   {"ROA", "0.0038 (0.0008)"},
    {"CMR", "0.0385 (0.2356)"},    {"CR", "0.0476 (0.0195)"},     {"FBGDP", "-0.0454 (0.0049)"},
    {"GDGDP", "0.1893 (0.0405)"},  {"TRGDP", "0.0745 (0.0027)"},  {"EDGDP", "0.1944 (0.0317)"},
    {"RED", "0.5212 (0.1647)"},    {"CABGDP", "-0.0124 (0.0149)"}, {"REER", "104.8600 (5.4134)"},
    {"NIIP", "-1.3347 (0.4508)"},
};

}  // namespace

int main() {
    criterion(1, "flat within-weight is 1/19 = 0.0526", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto registry = reference_registry(WeightingMode::flat);
        bool ok = registry.size() == 19;
        for (const auto& s : registry) {
            ok = ok && text::fixed(s.within_weight, 4) == "0.0526" &&
                 std::abs(s.within_weight - 1.0 / 19.0) < 5e-5;
        }
        const double ms = elapsed_ms(start);
        return Outcome{ok && ms < 1.0, text::fixed(registry.front().within_weight, 4) + ", " +
                                           text::fixed(ms, 3) + " ms"};
    });

    criterion(2, "composite of unit and one-hot sub-indices is exact", [] {
        auto subs_of = [](SectorWeights level) {
            std::array<SectorIndexSeries, 4> subs;
            for (SectorId s : kAllSectors) {
                subs[sector_index(s)] = {s, {2016, 2017}, {level[sector_index(s)], level[sector_index(s)]}};
            }
            return subs;
        };
        const auto ones = composite_afsi(subs_of({1, 1, 1, 1}), kDefaultSectorWeights);
        const auto rs = composite_afsi(subs_of({1, 0, 0, 0}), kDefaultSectorWeights);
        const bool ok = ones.afsi[0] == 1.0 && ones.afsi[1] == 1.0 && rs.afsi[0] == 0.15 &&
                        rs.afsi[1] == 0.15;
        return Outcome{ok, "AFSI(1,1,1,1) = " + text::general(ones.afsi[0], 15) +
                               ", AFSI(1,0,0,0) = " + text::general(rs.afsi[0], 15)};
    });

    criterion(3, "z-scored series have mean 0 and sample std 1", [] {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(1001);
        double worst_mean = 0.0;
        double worst_std = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto c = testing::make_random_case(rng);
            const auto n = normalize_panel(c.panel, c.registry, c.config);
            for (const auto& [id, z] : n.columns) {
                double m = 0.0;
                for (double v : z) m += v;
                m /= static_cast<double>(z.size());
                double ss = 0.0;
                for (double v : z) ss += (v - m) * (v - m);
                const double sd = std::sqrt(ss / static_cast<double>(z.size() - 1));
                worst_mean = std::max(worst_mean, std::abs(m));
                worst_std = std::max(worst_std, std::abs(sd - 1.0));
            }
        }
        const double ms = elapsed_ms(start);
        return Outcome{worst_mean < 1e-12 && worst_std < 1e-12 && ms < 5000.0,
                       "max |mean| " + sci(worst_mean) + ", max |std-1| " + sci(worst_std) +
                           ", " + text::fixed(ms, 0) + " ms"};
    });

    criterion(4, "pipeline matches brute-force recomputation from CSV", [] {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(1002);
        double worst = 0.0;
        int cases = 0;
        for (auto mode : {WeightingMode::sector, WeightingMode::flat}) {
            for (auto order : {AggregationOrder::normalize_first, AggregationOrder::standardize_after}) {
                testing::RandomCaseOptions options{5, 12, 3, 15, mode, order};
                for (int i = 0; i < 50; ++i, ++cases) {
                    const auto c = testing::make_random_case(rng, options);
                    const auto got = run_pipeline(c.panel, c.registry, c.config);
                    const auto ref = oracle::recompute(c.panel_csv, c.registry_csv,
                                                       oracle_settings(c.config));
                    if (ref.years != got.years) return Outcome{false, "year axis differs"};
                    for (std::size_t t = 0; t < got.years.size(); ++t) {
                        worst = std::max(worst, std::abs(got.afsi[t] - ref.afsi[t]));
                        for (std::size_t s = 0; s < 4; ++s) {
                            worst = std::max(worst,
                                             std::abs(got.sectors[s].values[t] - ref.sectors[s][t]));
                        }
                    }
                }
            }
        }
        const double ms = elapsed_ms(start);
        return Outcome{worst < 1e-12 && ms < 10000.0, std::to_string(cases) + " panels, max diff " +
                                                         sci(worst) + ", " + text::fixed(ms, 0) +
                                                         " ms"};
    });

    criterion(5, "flat mode equals sector mode with n_s/n sector weights", [] {
        std::mt19937_64 rng(1003);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            auto c = testing::make_random_case(rng);
            const auto n = static_cast<double>(c.registry.size());
            std::array<int, 4> counts{};
            for (const auto& s : c.registry) ++counts[sector_index(s.sector)];

            Registry flat_reg = c.registry;
            for (auto& s : flat_reg) s.within_weight = 1.0 / n;
            IndexConfig flat = c.config;
            flat.weighting_mode = WeightingMode::flat;

            Registry sector_reg = c.registry;
            for (auto& s : sector_reg) s.within_weight = 1.0 / counts[sector_index(s.sector)];
            IndexConfig sector = c.config;
            sector.weighting_mode = WeightingMode::sector;
            for (std::size_t k = 0; k < 4; ++k) sector.sector_weights[k] = counts[k] / n;

            const auto a = run_pipeline(c.panel, flat_reg, flat);
            const auto b = run_pipeline(c.panel, sector_reg, sector);
            worst = std::max(worst, max_diff(a, b));
        }
        return Outcome{worst < 1e-12, "100 panels, max diff " + sci(worst)};
    });

    criterion(6, "what-if recomputation agrees with the closed form", [] {
        std::mt19937_64 rng(1004);
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        double worst = 0.0;
        int triples = 0;
        for (int i = 0; i < 500; ++i) {
            testing::RandomCaseOptions options{5, 12, 3, 15};
            options.mode = i % 2 ? WeightingMode::flat : WeightingMode::sector;
            options.normalization = i % 3 ? Normalization::zscore : Normalization::minmax;
            const auto c = testing::make_random_case(rng, options);
            std::uniform_int_distribution<std::size_t> pick_ind(0, c.registry.size() - 1);
            std::uniform_int_distribution<std::size_t> pick_year(0, c.panel.years().size() - 1);
            const auto& id = c.registry[pick_ind(rng)].indicator_id;
            const int year = c.panel.years()[pick_year(rng)];
            const double sigma = summary_stats(c.panel.series(id), StdMode::sample).std;
            const auto r = whatif(c.panel, c.registry, c.config, id, year, u(rng) * sigma);
            if (!r.predicted_delta_afsi) return Outcome{false, "no closed form for " + id};
            worst = std::max(worst, std::abs(r.delta_afsi - *r.predicted_delta_afsi));
            ++triples;
        }
        return Outcome{worst < 1e-9, std::to_string(triples) + " triples, max diff " + sci(worst)};
    });

    criterion(7, "stats on the shipped dataset reproduces the published table", [] {
        const auto dir = fs::temp_directory_path() / "afsi_acceptance_stats";
        fs::remove_all(dir);
        std::ostringstream out, err;
        const auto start = std::chrono::steady_clock::now();
        const int code = cli::run({"stats", "--panel", testing::data_path("panel.csv"),
                                   "--indicators", testing::data_path("indicators.csv"),
                                   "--out-dir", dir.string()},
                                  out, err);
        const double ms = elapsed_ms(start);
        int matched = 0;
        std::string missing;
        const auto printed = out.str();
        for (const auto& row : kTable) {
            bool found = false;
            for (auto line : text::lines(printed)) {
                const auto fields = text::split(text::trim(line), ' ');
                if (!fields.empty() && fields.front() == row.id &&
                    line.find(std::string("  ") + row.expected + "  9") != std::string_view::npos) {
                    found = true;
                }
            }
            if (found) ++matched;
            else missing += std::string(" ") + row.id;
        }
        return Outcome{code == 0 && matched == 19 && ms < 1000.0,
                       std::to_string(matched) + "/19 pairs" +
                           (missing.empty() ? "" : ", missing:" + missing) + ", " +
                           text::fixed(ms, 1) + " ms"};
    });

    criterion(8, "monetary stress in the final year lowers MSI and AFSI", [] {
        const auto panel = shipped_panel();
        const auto registry = shipped_registry();
        const IndexConfig config;
        const int last = panel.years().back();
        auto sd = [&](const char* id) {
            return summary_stats(panel.series(id), config.std_mode).std;
        };
        const std::vector<Perturbation> shocks{
            {"PLR", last, -2.0 * sd("PLR")},  {"CRAR", last, -2.0 * sd("CRAR")},
            {"ROA", last, -2.0 * sd("ROA")},  {"CMR", last, -2.0 * sd("CMR")},
            {"CR", last, 2.0 * sd("CR")},
        };
        const auto out = apply_perturbations(panel, registry, config, shocks);
        const auto yoy = yoy_direction(out.perturbed);
        const char msi = direction_symbol(yoy.back().directions[sector_index(SectorId::MS)]);
        const double before = out.baseline.afsi.back();
        const double after = out.perturbed.afsi.back();
        return Outcome{msi == '-' && after < before,
                       std::string("MSI yoy ") + msi + ", AFSI FY" + std::to_string(last) + " " +
                           text::fixed(before, 4) + " -> " + text::fixed(after, 4)};
    });

    criterion(9, "compute is deterministic and indices.csv round-trips", [] {
        const auto base = fs::temp_directory_path() / "afsi_acceptance_compute";
        fs::remove_all(base);
        std::array<std::map<std::string, std::string>, 2> trees;
        for (int k = 0; k < 2; ++k) {
            const auto dir = base / std::to_string(k);
            std::ostringstream out, err;
            const int code = cli::run({"compute", "--panel", testing::data_path("panel.csv"),
                                       "--indicators", testing::data_path("indicators.csv"),
                                       "--settings", testing::data_path("settings.cfg"),
                                       "--out-dir", dir.string()},
                                      out, err);
            if (code != 0) return Outcome{false, "compute exited " + std::to_string(code)};
            trees[static_cast<std::size_t>(k)] = read_tree(dir);
        }
        const auto series = run_pipeline(shipped_panel(), shipped_registry(), IndexConfig{});
        const auto back = read_indices_csv(trees[0].at("indices.csv"));
        bool same = back.years == series.years && back.afsi == series.afsi;
        for (SectorId s : kAllSectors) same = same && back.sector(s).values == series.sector(s).values;
        return Outcome{trees[0] == trees[1] && same,
                       std::to_string(trees[0].size()) + " files identical: " +
                           (trees[0] == trees[1] ? "yes" : "no") +
                           ", round-trip exact: " + (same ? "yes" : "no")};
    });

    criterion(10, "positive affine rescaling of raw indicators leaves indices unchanged", [] {
        const auto panel = shipped_panel();
        const auto registry = shipped_registry();
        const auto baseline = read_indices_csv(write_indices_csv(run_pipeline(panel, registry, {})));
        std::mt19937_64 rng(1005);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        int maps = 0;
        auto rescale = [&](Panel p, const std::string& id) {
            const auto stats = summary_stats(p.series(id), StdMode::sample);
            const double b = std::pow(10.0, 2.0 * u(rng));
            const double a = 2.0 * u(rng) * b * (std::abs(stats.mean) + stats.std);
            const auto years = p.years();
            for (int y : years) p = p.with_value(id, y, a + b * p.at(id, y));
            return p;
        };
        for (int i = 0; i < 200; ++i, ++maps) {
            const auto& id = registry[static_cast<std::size_t>(i) % registry.size()].indicator_id;
            const auto moved = rescale(panel, id);
            worst = std::max(worst, max_diff(baseline, read_indices_csv(write_indices_csv(
                                                           run_pipeline(moved, registry, {})))));
        }
        for (int i = 0; i < 20; ++i, ++maps) {
            auto moved = panel;
            for (const auto& s : registry) moved = rescale(moved, s.indicator_id);
            worst = std::max(worst, max_diff(baseline, read_indices_csv(write_indices_csv(
                                                           run_pipeline(moved, registry, {})))));
        }
        return Outcome{worst < 1e-12, std::to_string(maps) + " rescalings, max diff " + sci(worst)};
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
