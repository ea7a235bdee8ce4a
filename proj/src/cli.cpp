#include "afsi/cli.hpp"

#include "afsi/aggregation.hpp"
#include "afsi/analysis.hpp"
#include "afsi/ingestion.hpp"
#include "afsi/normalization.hpp"
#include "afsi/report.hpp"
#include "afsi/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace afsi::cli {

namespace {

namespace fs = std::filesystem;

struct IoFailure : Error {
    using Error::Error;
};

struct InputPaths {
    std::string panel;
    std::string indicators;
    std::string settings;
};

struct Inputs {
    Panel panel;
    Registry registry;
    IndexConfig config;
};

Inputs load_inputs(const InputPaths& paths) {
    Inputs in;
    in.panel = parse_panel_csv(read_text_file(paths.panel), paths.panel);
    in.registry = parse_indicator_registry(read_text_file(paths.indicators), paths.indicators);
    if (!paths.settings.empty()) {
        in.config = parse_settings(read_text_file(paths.settings), paths.settings);
    }
    return in;
}

/// Prints every issue; returns false when any is an error.
bool report_validation(const Inputs& in, const InputPaths& paths, std::ostream& err) {
    const auto settings_name = paths.settings.empty() ? std::string("settings") : paths.settings;
    const auto registry_report = validate_registry(in.registry, in.config);
    for (const auto& issue : registry_report.issues) {
        const bool from_settings = issue.message.find("sector weight") != std::string::npos;
        err << (issue.severity == Severity::error ? "error: " : "warning: ")
            << (from_settings ? settings_name : paths.indicators) << ": " << issue.message << "\n";
    }
    if (!registry_report.ok()) return false;

    const auto panel_report = validate_panel(in.panel, in.registry);
    for (const auto& issue : panel_report.issues) {
        err << (issue.severity == Severity::error ? "error: " : "warning: ") << paths.panel
            << ": " << issue.message << "\n";
    }
    return panel_report.ok();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoFailure("cannot write " + path.string());
    file << content;
    if (!file) throw IoFailure("cannot write " + path.string());
}

fs::path prepare_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoFailure("cannot create directory " + dir);
    return fs::path(dir);
}

int cmd_compute(const InputPaths& paths, const std::string& out_dir, double watch_k,
                double alert_k, std::ostream& out, std::ostream& err) {
    const auto in = load_inputs(paths);
    if (!report_validation(in, paths, err)) return kValidationFailure;

    const auto series = compute_indices(in.panel, in.registry, in.config);
    const auto stats = panel_summary(in.panel, in.registry, in.config.std_mode);
    const auto flags = warning_flags(series, in.config.std_mode, watch_k, alert_k);

    const auto dir = prepare_dir(out_dir);
    write_file(dir / "indices.csv", write_indices_csv(series));
    write_file(dir / "stats.csv", write_stats_csv(stats));
    write_file(dir / "flags.csv", write_flags_csv(flags));
    for (const auto& [name, chart] : index_charts(series)) {
        write_file(dir / name, emit_svg(chart));
    }

    const auto yoy = yoy_direction(series);
    const std::size_t last = series.years.size() - 1;
    for (std::size_t i = 0; i < kSeriesLabels.size(); ++i) {
        out << kSeriesLabels[i] << "  FY" << series.years[last] << "  "
            << text::fixed(series_values(series, i)[last], 4) << "  yoy "
            << (yoy.empty() ? '0' : direction_symbol(yoy.back().directions[i])) << "\n";
    }
    out << "flags: " << flags.size() << "\n";
    return kSuccess;
}

int cmd_stats(const InputPaths& paths, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
    const auto in = load_inputs(paths);
    if (!report_validation(in, paths, err)) return kValidationFailure;

    const auto stats = panel_summary(in.panel, in.registry, in.config.std_mode);
    std::size_t width = 14;
    for (const auto& s : stats) width = std::max(width, s.indicator_id.size() + 2);
    out << "indicator_id" << std::string(width - 12, ' ') << "mean (std)  n\n";
    for (const auto& s : stats) {
        out << s.indicator_id << std::string(width - s.indicator_id.size(), ' ')
            << format_mean_std(s) << "  " << s.n << "\n";
    }

    const auto dir = prepare_dir(out_dir);
    write_file(dir / "stats.csv", write_stats_csv(stats));
    return kSuccess;
}

int cmd_validate(const InputPaths& paths, std::ostream& out, std::ostream& err) {
    const auto in = load_inputs(paths);
    if (!report_validation(in, paths, err)) return kValidationFailure;
    out << "ok: " << in.registry.size() << " indicators, " << in.panel.years().size()
        << " years (" << in.panel.years().front() << "-" << in.panel.years().back() << ")\n";
    return kSuccess;
}

int cmd_whatif(const InputPaths& paths, const std::string& indicator, int year, double delta,
               const std::string& out_dir, std::ostream& out, std::ostream& err) {
    const auto in = load_inputs(paths);
    if (!report_validation(in, paths, err)) return kValidationFailure;

    const auto r = whatif(in.panel, in.registry, in.config, indicator, year, delta);
    auto predicted = [](const std::optional<double>& v) {
        return v ? text::fixed(*v, 12) : std::string("n/a");
    };
    const std::string sector(to_string(r.sector));
    out << "what-if " << r.indicator_id << " (" << sector << ") FY" << r.year << " delta "
        << text::general(r.delta, 10) << "\n";
    out << "quantity      recomputed        closed_form\n";
    out << "delta_" << sector << "      " << text::fixed(r.delta_sub_index, 12) << "  "
        << predicted(r.predicted_delta_sub_index) << "\n";
    out << "delta_AFSI    " << text::fixed(r.delta_afsi, 12) << "  "
        << predicted(r.predicted_delta_afsi) << "\n";

    if (!out_dir.empty()) {
        const auto dir = prepare_dir(out_dir);
        write_file(dir / "whatif.csv", write_whatif_csv(r));
    }
    return kSuccess;
}

void add_input_options(CLI::App* sub, InputPaths& paths) {
    sub->add_option("--panel", paths.panel, "panel.csv (fiscal_year,indicator_id,value)")
        ->required();
    sub->add_option("--indicators", paths.indicators, "indicators.csv registry")->required();
    sub->add_option("--settings", paths.settings, "settings.cfg (key=value)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Aggregate financial stability index from annual indicator panels", "afsi"};
    app.require_subcommand(1);

    InputPaths paths;
    std::string out_dir;
    double watch_k = kDefaultWatchK;
    double alert_k = kDefaultAlertK;
    std::string indicator;
    int year = 0;
    double delta = 0.0;

    auto* compute = app.add_subcommand("compute", "compute sub-indices, AFSI, flags and charts");
    add_input_options(compute, paths);
    compute->add_option("--out-dir", out_dir, "output directory")->required();
    compute->add_option("--watch-k", watch_k, "watch threshold in standard deviations");
    compute->add_option("--alert-k", alert_k, "alert threshold in standard deviations");

    auto* stats = app.add_subcommand("stats", "per-indicator mean and standard deviation");
    add_input_options(stats, paths);
    stats->add_option("--out-dir", out_dir, "directory for stats.csv (default: .)");

    auto* validate = app.add_subcommand("validate", "check inputs without computing");
    add_input_options(validate, paths);

    auto* what = app.add_subcommand("whatif", "frozen-stats perturbation of one cell");
    add_input_options(what, paths);
    what->add_option("--indicator", indicator, "indicator_id to perturb")->required();
    what->add_option("--year", year, "fiscal year to perturb")->required();
    what->add_option("--delta", delta, "change in raw units")->required();
    what->add_option("--out-dir", out_dir, "write whatif.csv here");

    try {
        // CLI11 consumes the vector from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageOrIoFailure;
    }

    try {
        if (compute->parsed()) return cmd_compute(paths, out_dir, watch_k, alert_k, out, err);
        if (stats->parsed()) return cmd_stats(paths, out_dir.empty() ? "." : out_dir, out, err);
        if (validate->parsed()) return cmd_validate(paths, out, err);
        return cmd_whatif(paths, indicator, year, delta, out_dir, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageOrIoFailure;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kUsageOrIoFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
}

}  // namespace afsi::cli
