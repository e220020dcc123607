#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homsim/assembly.hpp"
#include "homsim/exact.hpp"
#include "homsim/oracle.hpp"
#include "homsim/report.hpp"

namespace {

using namespace homsim;

struct SpectralOptions {
    double sigma_omega = 0.0;
    double fwhm_nm = 0.0;
    double center_nm = 0.0;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* fwhm_opt = nullptr;
    CLI::Option* center_opt = nullptr;

    bool sigma_set() const { return sigma_opt && sigma_opt->count() > 0; }
    bool pair_set() const {
        return (fwhm_opt && fwhm_opt->count() > 0) || (center_opt && center_opt->count() > 0);
    }
    bool given() const { return sigma_set() || sigma_omega > 0.0 || fwhm_nm > 0.0; }

    // --sigma-omega wins when given explicitly; otherwise the filter pair
    // (which may come from subcommand defaults)
    OverlapModel resolve() const {
        if (sigma_set()) {
            if (pair_set())
                throw CLI::ValidationError(
                    "give either --sigma-omega or the --fwhm-nm/--center-nm pair, not both");
            if (!(sigma_omega > 0.0))
                throw CLI::ValidationError("--sigma-omega must be positive");
            return OverlapModel{sigma_omega, 0.0};
        }
        if (!(fwhm_nm > 0.0) || !(center_nm > 0.0)) {
            if (sigma_omega > 0.0) return OverlapModel{sigma_omega, 0.0};
            throw CLI::ValidationError(
                "spectral width required: --sigma-omega, or --fwhm-nm together with --center-nm");
        }
        const double center_m = center_nm * 1e-9;
        return OverlapModel{sigma_from_filter(fwhm_nm * 1e-9, center_m),
                            2.0 * std::numbers::pi * speed_of_light / center_m};
    }

    void add_flags(CLI::App* cmd) {
        sigma_opt = cmd->add_option("--sigma-omega", sigma_omega,
                                    "Amplitude spectral width in rad/s");
        fwhm_opt = cmd->add_option("--fwhm-nm", fwhm_nm, "Filter intensity FWHM in nm");
        center_opt = cmd->add_option("--center-nm", center_nm,
                                     "Filter center wavelength in nm");
    }
};

struct ScanRange {
    double min_um = 0.0;
    double max_um = 0.0;
    int steps = 0;
};

ScanRange parse_scan_range(const std::string& text) {
    ScanRange range;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &range.min_um, &range.max_um,
                    &range.steps, &extra) != 3)
        throw CLI::ValidationError("--scan-um expects min:max:steps, e.g. -400:400:801");
    if (range.steps < 2) throw CLI::ValidationError("--scan-um needs at least 2 steps");
    if (!(range.min_um < range.max_um))
        throw CLI::ValidationError("--scan-um needs min < max");
    return range;
}

Event parse_event(const std::string& text, int photons_per_mode) {
    Event event;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d%c", &event.m, &event.n, &extra) != 2 ||
        event.m < 0 || event.n < 0)
        throw CLI::ValidationError("event '" + text + "' is not of the form m,n");
    if (event.m + event.n != 2 * photons_per_mode)
        throw CLI::ValidationError("event '" + text + "' does not have " +
                                   std::to_string(2 * photons_per_mode) + " photons");
    return event;
}

std::vector<Event> parse_events(const std::vector<std::string>& texts, int photons_per_mode) {
    std::vector<Event> events;
    for (const auto& text : texts) {
        if (text == "all") {
            const auto all = all_events(photons_per_mode);
            events.insert(events.end(), all.begin(), all.end());
        } else {
            events.push_back(parse_event(text, photons_per_mode));
        }
    }
    return events;
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
}

// largest |assembly - oracle| over the given events at 11 delays spanning the range
double oracle_deviation(int k, const OverlapModel& model, const ScanRange& range,
                        std::span<const Event> events, const CouplerSpec& coupler) {
    double worst = 0.0;
    for (double x : linspace(range.min_um * 1e-6, range.max_um * 1e-6, 11)) {
        const double alpha = overlap_from_delay(model, x);
        for (const Event& event : events) {
            const double a = event_probability(k, alpha, event, coupler);
            const double b = oracle_event_probability(k, alpha, event, coupler);
            worst = std::max(worst, std::abs(a - b));
        }
    }
    return worst;
}

int run_scan(int k, const SpectralOptions& spectral, const std::string& range_text,
             const std::vector<std::string>& event_texts, const std::string& format,
             const std::string& output, bool oracle_check, double transmission) {
    const OverlapModel model = spectral.resolve();
    const ScanRange range = parse_scan_range(range_text);
    const auto events = parse_events(event_texts, k);
    if (events.empty()) throw CLI::ValidationError("--events is required");
    const CouplerSpec coupler{transmission};
    coupler.validate();

    const auto xs = linspace(range.min_um * 1e-6, range.max_um * 1e-6, range.steps);
    const ScanResult result = scan(k, model, xs, events, coupler);

    if (format == "csv") {
        std::ostringstream os;
        write_csv(os, result);
        write_output(os.str(), output);
    } else {
        write_output(to_json_string(result), output);
    }

    if (oracle_check) {
        const double worst = oracle_deviation(k, model, range, events, coupler);
        if (worst > 1e-10) {
            std::cerr << "oracle check failed: max deviation " << format_number(worst)
                      << " exceeds 1e-10\n";
            return 2;
        }
        std::cerr << "oracle check passed: max deviation " << format_number(worst) << "\n";
    }
    return 0;
}

int run_extrema(int k, const std::string& event_text, const SpectralOptions& spectral,
                int grid_points, double transmission, const std::string& format) {
    const Event event = parse_event(event_text, k);
    const CouplerSpec coupler{transmission};
    coupler.validate();
    std::optional<OverlapModel> model;
    if (spectral.given()) model = spectral.resolve();

    const ExtremumReport report = find_extrema(k, event, coupler, grid_points, model);

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["event"] = {report.event.m, report.event.n};
        doc["photons_per_mode"] = k;
        doc["classification"] = std::string(to_string(report.classification));
        doc["p_zero_delay"] = report.p_zero_delay;
        doc["p_infinity"] = report.p_infinity;
        auto& interior = doc["interior"] = nlohmann::ordered_json::array();
        for (const auto& ext : report.interior) {
            nlohmann::ordered_json entry;
            entry["u"] = ext.u;
            entry["p"] = ext.p;
            entry["kind"] = ext.is_minimum ? "minimum" : "maximum";
            if (ext.delay_m) entry["x_um"] = *ext.delay_m * 1e6;
            interior.push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "event: (" << event.m << "," << event.n << ")\n"
              << "photons per mode: " << k << "\n"
              << "classification: " << to_string(report.classification) << "\n"
              << "P(x=0) = " << format_number(report.p_zero_delay) << "\n"
              << "P(x->inf) = " << format_number(report.p_infinity) << "\n";
    for (const auto& ext : report.interior) {
        std::cout << "interior " << (ext.is_minimum ? "minimum" : "maximum")
                  << ": u* = " << format_number(ext.u)
                  << ", P* = " << format_number(ext.p);
        if (ext.delay_m)
            std::cout << ", x* = +/-" << format_number(*ext.delay_m * 1e6) << " um";
        std::cout << "\n";
    }
    if (report.interior.empty()) std::cout << "no interior extrema\n";
    return 0;
}

int run_figures(const std::vector<int>& ks, const SpectralOptions& spectral,
                const std::string& range_text, double transmission,
                const std::string& out_dir) {
    const OverlapModel model = spectral.resolve();
    const ScanRange range = parse_scan_range(range_text);
    const CouplerSpec coupler{transmission};
    coupler.validate();
    const auto xs = linspace(range.min_um * 1e-6, range.max_um * 1e-6, range.steps);
    const auto written = emit_figure_pack(ks, model, xs, coupler, out_dir);
    for (const auto& path : written) std::cout << path.string() << "\n";
    return 0;
}

int run_table1() {
    for (int k : {1, 2}) {
        const auto table = detection_table_exact(k);
        const int n_total = 2 * k;
        std::cout << "p(N=" << n_total << ";m,n)";
        std::cout << "  indis";
        if (k > 1) std::cout << "  inter";
        std::cout << "  dist\n";
        // the two experimentally probed event rows per k: (N,0) and the
        // balanced split
        for (int m : {n_total, k}) {
            std::cout << "(" << m << "," << (n_total - m) << ")";
            for (int j = k; j >= 0; --j)
                std::cout << "  " << to_string(table[j][m]);
            std::cout << "\n";
        }
        if (k == 1) std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact event statistics of partially distinguishable photons "
                 "interfering at a two-mode coupler"};
    app.require_subcommand(1);

    constexpr double balanced_t = 0.70710678118654752440;

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Event probabilities along a delay scan");
    int scan_k = 1;
    SpectralOptions scan_spectral;
    std::string scan_range = "-400:400:801";
    std::vector<std::string> scan_events;
    std::string scan_format = "csv";
    std::string scan_output;
    bool scan_oracle_check = false;
    double scan_transmission = balanced_t;
    scan_cmd->add_option("--photons-per-mode", scan_k, "Photons per input mode (k)")
        ->required()
        ->check(CLI::Range(1, max_photons_per_mode));
    scan_spectral.add_flags(scan_cmd);
    scan_cmd->add_option("--scan-um", scan_range, "Delay range min:max:steps in um");
    scan_cmd->add_option("--events", scan_events, "Events as m,n (repeatable) or 'all'")
        ->required();
    scan_cmd->add_option("--format", scan_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--output", scan_output, "Output path (default: stdout)");
    scan_cmd->add_flag("--oracle-check", scan_oracle_check,
                       "Cross-check against the brute-force evolution at 11 delays");
    scan_cmd->add_option("--transmission", scan_transmission,
                         "Coupler transmission amplitude");

    // extrema
    auto* extrema_cmd =
        app.add_subcommand("extrema", "Classify one event's delay dependence");
    int extrema_k = 1;
    std::string extrema_event;
    SpectralOptions extrema_spectral;
    int extrema_grid = 1025;
    double extrema_transmission = balanced_t;
    std::string extrema_format = "text";
    extrema_cmd->add_option("--photons-per-mode", extrema_k, "Photons per input mode (k)")
        ->required()
        ->check(CLI::Range(1, max_photons_per_mode));
    extrema_cmd->add_option("--event", extrema_event, "Event as m,n")->required();
    extrema_spectral.add_flags(extrema_cmd);
    extrema_cmd->add_option("--grid", extrema_grid, "Grid points over u = alpha^2")
        ->check(CLI::Range(64, 1 << 20));
    extrema_cmd->add_option("--transmission", extrema_transmission,
                            "Coupler transmission amplitude");
    extrema_cmd->add_option("--format", extrema_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    // figures
    auto* figures_cmd =
        app.add_subcommand("figures", "Write the weight/probability CSV pack");
    std::vector<int> figures_ks{1, 2, 3};
    SpectralOptions figures_spectral;
    figures_spectral.fwhm_nm = 4.0;
    figures_spectral.center_nm = 780.0;
    std::string figures_range = "-400:400:801";
    double figures_transmission = balanced_t;
    std::string figures_out_dir = ".";
    figures_cmd->add_option("--photons-per-mode", figures_ks, "Photons per mode, repeatable");
    figures_spectral.add_flags(figures_cmd);
    figures_cmd->add_option("--scan-um", figures_range, "Delay range min:max:steps in um");
    figures_cmd->add_option("--transmission", figures_transmission,
                            "Coupler transmission amplitude");
    figures_cmd->add_option("--out-dir", figures_out_dir, "Output directory");

    // table1
    app.add_subcommand("table1",
                       "Exact per-type detection probability fractions for k = 1, 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (scan_cmd->parsed())
            return run_scan(scan_k, scan_spectral, scan_range, scan_events, scan_format,
                            scan_output, scan_oracle_check, scan_transmission);
        if (extrema_cmd->parsed())
            return run_extrema(extrema_k, extrema_event, extrema_spectral, extrema_grid,
                               extrema_transmission, extrema_format);
        if (figures_cmd->parsed())
            return run_figures(figures_ks, figures_spectral, figures_range,
                               figures_transmission, figures_out_dir);
        return run_table1();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
