#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "homsim/decomposition.hpp"
#include "homsim/scattering.hpp"
#include "homsim/spectral.hpp"

namespace homsim {

/// Output event: m photons in the first output mode, n in the second.
struct Event {
    int m = 0;
    int n = 0;

    bool operator==(const Event&) const = default;
};

/// Every event for N = 2k photons, bunching first: (N,0), (0,N), then the
/// remaining events by descending m.
std::vector<Event> all_events(int photons_per_mode);

/// Physical event probability: the per-type detection probabilities
/// weighted by the decomposition weights at overlap alpha.
double event_probability(int photons_per_mode, double alpha, Event event,
                         const CouplerSpec& coupler);

struct ScanRow {
    double x = 0.0;  // delay in meters
    double alpha_sq = 0.0;
    std::vector<double> weights_per_j;  // ordered j = k .. 0
    double w_indis = 0.0;
    double w_inter = 0.0;
    double w_dist = 0.0;
    std::vector<double> event_probs;  // aligned with ScanResult::events
};

struct ScanResult {
    int photons_per_mode = 1;
    std::vector<Event> events;
    std::vector<ScanRow> rows;  // row order matches the input delays
};

ScanResult scan(int photons_per_mode, const OverlapModel& model,
                std::span<const double> delays_m, std::span<const Event> events,
                const CouplerSpec& coupler);

enum class Monotonicity { monotonic, non_monotonic, flat };

std::string_view to_string(Monotonicity m);

/// Interior extremum of P over u = alpha^2. By delay symmetry it sits at
/// the pair of delays +/- delay_m (the non-negative one is stored, and
/// only when an OverlapModel was supplied).
struct Extremum {
    double u = 0.0;
    double p = 0.0;
    bool is_minimum = false;
    std::optional<double> delay_m;
};

struct ExtremumReport {
    Event event;
    Monotonicity classification = Monotonicity::monotonic;
    std::vector<Extremum> interior;  // ordered by increasing u
    double p_zero_delay = 0.0;  // P at x = 0, i.e. u = 1
    double p_infinity = 0.0;    // P as |x| -> inf, evaluated exactly at u = 0
};

/// Grid-then-golden-section extremum search for a curve on [0, 1].
/// grid_points >= 64; brackets are refined to an interval below 1e-10.
/// The grid must resolve neighboring extrema for them to be seen.
ExtremumReport curve_extrema(const std::function<double(double)>& p_of_u, int grid_points);

/// Extremum search for P(u) of one event; u is mapped back to delays when
/// a model is supplied.
ExtremumReport find_extrema(int photons_per_mode, Event event, const CouplerSpec& coupler,
                            int grid_points = 1025,
                            const std::optional<OverlapModel>& model = std::nullopt);

}  // namespace homsim
