#include "homsim/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace homsim {

namespace {

constexpr double um_per_m = 1e6;

double round_to_12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::vector<double> row_values(const ScanResult& result, const ScanRow& row) {
    std::vector<double> values;
    values.reserve(2 + row.weights_per_j.size() + 3 + row.event_probs.size());
    values.push_back(row.x * um_per_m);
    values.push_back(row.alpha_sq);
    values.insert(values.end(), row.weights_per_j.begin(), row.weights_per_j.end());
    values.push_back(row.w_indis);
    values.push_back(row.w_inter);
    values.push_back(row.w_dist);
    values.insert(values.end(), row.event_probs.begin(), row.event_probs.end());
    return values;
}

void write_table(std::ostream& os, std::span<const std::string> columns,
                 const std::vector<std::vector<double>>& rows) {
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "," : "") << format_number(row[c]);
        os << '\n';
    }
}

void write_file(const std::filesystem::path& path, std::span<const std::string> columns,
                const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    write_table(os, columns, rows);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> scan_columns(const ScanResult& result) {
    std::vector<std::string> columns{"x_um", "alpha_sq"};
    for (int j = result.photons_per_mode; j >= 0; --j)
        columns.push_back("W_j" + std::to_string(j));
    columns.insert(columns.end(), {"W_indis", "W_inter", "W_dist"});
    for (const Event& event : result.events)
        columns.push_back("P_" + std::to_string(event.m) + "_" + std::to_string(event.n));
    return columns;
}

void write_csv(std::ostream& os, const ScanResult& result) {
    std::vector<std::vector<double>> rows;
    rows.reserve(result.rows.size());
    for (const auto& row : result.rows) rows.push_back(row_values(result, row));
    write_table(os, scan_columns(result), rows);
}

std::string to_json_string(const ScanResult& result) {
    nlohmann::ordered_json doc;
    doc["photons_per_mode"] = result.photons_per_mode;
    doc["columns"] = scan_columns(result);
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (double v : row_values(result, row)) jrow.push_back(round_to_12(v));
        rows.push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 2) throw std::invalid_argument("linspace: need at least two steps");
    if (!(lo < hi)) throw std::invalid_argument("linspace: lower bound must be below upper");
    std::vector<double> xs(steps);
    const double denom = steps - 1;
    // endpoint-weighted form: exact endpoints, and an exact zero at the
    // center of a symmetric range
    for (int i = 0; i < steps; ++i) xs[i] = (lo * (denom - i) + hi * i) / denom;
    return xs;
}

std::vector<std::filesystem::path> emit_figure_pack(std::span<const int> photons_per_mode_list,
                                                    const OverlapModel& model,
                                                    std::span<const double> delays_m,
                                                    const CouplerSpec& coupler,
                                                    const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    for (int k : photons_per_mode_list) {
        const auto weights = weight_curves(k, model, delays_m);
        const std::string suffix = "N" + std::to_string(2 * k) + ".csv";

        std::vector<std::string> columns{"x_um", "alpha_sq"};
        std::vector<std::vector<double>> rows;
        rows.reserve(weights.size());
        if (k <= 2) {
            columns.insert(columns.end(), {"W_indis", "W_inter", "W_dist"});
            for (const auto& w : weights)
                rows.push_back({w.x * um_per_m, w.alpha_sq, w.indis, w.inter, w.dist});
        } else {
            for (int j = k; j >= 0; --j) columns.push_back("W_j" + std::to_string(j));
            columns.push_back("W_inter");
            for (const auto& w : weights) {
                std::vector<double> row{w.x * um_per_m, w.alpha_sq};
                row.insert(row.end(), w.per_j.begin(), w.per_j.end());
                row.push_back(w.inter);
                rows.push_back(std::move(row));
            }
        }
        const auto weights_path = out_dir / ("weights_" + suffix);
        write_file(weights_path, columns, rows);
        written.push_back(weights_path);

        if (k >= 2) {
            const auto events = all_events(k);
            const auto result = scan(k, model, delays_m, events, coupler);
            std::vector<std::string> pcolumns{"x_um", "alpha_sq"};
            for (const Event& event : events)
                pcolumns.push_back("P_" + std::to_string(event.m) + "_" +
                                   std::to_string(event.n));
            std::vector<std::vector<double>> prows;
            prows.reserve(result.rows.size());
            for (const auto& row : result.rows) {
                std::vector<double> prow{row.x * um_per_m, row.alpha_sq};
                prow.insert(prow.end(), row.event_probs.begin(), row.event_probs.end());
                prows.push_back(std::move(prow));
            }
            const auto probs_path = out_dir / ("probs_" + suffix);
            write_file(probs_path, pcolumns, prows);
            written.push_back(probs_path);
        }
    }
    return written;
}

}  // namespace homsim
