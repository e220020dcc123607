#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "homsim/assembly.hpp"

namespace homsim {

/// printf "%.12g": 12 significant digits, the fixed formatting of every
/// emitted table.
std::string format_number(double v);

/// Column names of a scan table: x_um, alpha_sq, per-j weights W_j<k>..W_j0,
/// aggregated W_indis/W_inter/W_dist, then P_<m>_<n> per event in order.
std::vector<std::string> scan_columns(const ScanResult& result);

/// Comma-separated, '.' decimal, Unix newlines, mandatory header.
void write_csv(std::ostream& os, const ScanResult& result);

/// The same table as JSON (ordered keys, two-space indent, trailing
/// newline). Values are rounded to 12 significant digits before insertion
/// so that a re-read and re-emit reproduces the bytes.
std::string to_json_string(const ScanResult& result);

/// Evenly spaced delay grid, in meters.
std::vector<double> linspace(double lo, double hi, int steps);

/// One weights CSV per k (aggregate triple for k <= 2, per-j plus the
/// inter aggregate beyond) and, for k >= 2, one CSV with every event
/// probability. Returns the paths written.
std::vector<std::filesystem::path> emit_figure_pack(std::span<const int> photons_per_mode_list,
                                                    const OverlapModel& model,
                                                    std::span<const double> delays_m,
                                                    const CouplerSpec& coupler,
                                                    const std::filesystem::path& out_dir);

}  // namespace homsim
