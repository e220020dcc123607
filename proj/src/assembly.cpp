#include "homsim/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "homsim/combinatorics.hpp"

namespace homsim {

namespace {

void check_event(int k, Event event) {
    if (event.m < 0 || event.n < 0 || event.m + event.n != 2 * k)
        throw std::invalid_argument("event photon count does not match 2k");
}

// P(u) = sum_j C(k,j) u^j (1-u)^(k-j) p_j(event)
double combine(int k, double u, std::span<const double> p_by_j) {
    double total = 0.0;
    for (int j = 0; j <= k; ++j)
        total += static_cast<double>(binomial(k, j)) * std::pow(u, j) *
                 std::pow(1.0 - u, k - j) * p_by_j[j];
    return total;
}

std::vector<double> event_row(const std::vector<EventDistribution>& table, Event event) {
    std::vector<double> p_by_j;
    p_by_j.reserve(table.size());
    for (const auto& dist : table) p_by_j.push_back(dist.prob(event.m, event.n));
    return p_by_j;
}

// Golden-section refinement of an extremum bracketed by [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      bool maximize) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-11) {
        const bool keep_left = maximize ? (f1 > f2) : (f1 < f2);
        if (keep_left) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<Event> all_events(int photons_per_mode) {
    const int n_total = 2 * photons_per_mode;
    std::vector<Event> events;
    events.reserve(n_total + 1);
    events.push_back(Event{n_total, 0});
    events.push_back(Event{0, n_total});
    for (int m = n_total - 1; m >= 1; --m) events.push_back(Event{m, n_total - m});
    return events;
}

double event_probability(int photons_per_mode, double alpha, Event event,
                         const CouplerSpec& coupler) {
    check_event(photons_per_mode, event);
    const auto terms = decompose(InputSpec{photons_per_mode, alpha});
    const auto table = detection_table(photons_per_mode, coupler);
    double total = 0.0;
    for (const auto& term : terms) total += term.weight * table[term.j].prob(event.m, event.n);
    return total;
}

ScanResult scan(int photons_per_mode, const OverlapModel& model,
                std::span<const double> delays_m, std::span<const Event> events,
                const CouplerSpec& coupler) {
    for (Event event : events) check_event(photons_per_mode, event);
    const auto table = detection_table(photons_per_mode, coupler);

    ScanResult result;
    result.photons_per_mode = photons_per_mode;
    result.events.assign(events.begin(), events.end());
    result.rows.reserve(delays_m.size());
    const auto weights = weight_curves(photons_per_mode, model, delays_m);
    for (const auto& wrow : weights) {
        ScanRow row;
        row.x = wrow.x;
        row.alpha_sq = wrow.alpha_sq;
        row.weights_per_j = wrow.per_j;
        row.w_indis = wrow.indis;
        row.w_inter = wrow.inter;
        row.w_dist = wrow.dist;
        row.event_probs.reserve(events.size());
        for (Event event : events) {
            double p = 0.0;
            for (int j = 0; j <= photons_per_mode; ++j)
                p += wrow.per_j[photons_per_mode - j] * table[j].prob(event.m, event.n);
            row.event_probs.push_back(p);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string_view to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::monotonic: return "monotonic";
        case Monotonicity::non_monotonic: return "non-monotonic";
        case Monotonicity::flat: return "flat";
    }
    throw std::logic_error("to_string: unknown Monotonicity");
}

ExtremumReport curve_extrema(const std::function<double(double)>& p_of_u, int grid_points) {
    if (grid_points < 64)
        throw std::invalid_argument("curve_extrema: need at least 64 grid points");

    const double h = 1.0 / (grid_points - 1);
    std::vector<double> u(grid_points), p(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        u[i] = std::min(1.0, i * h);
        p[i] = p_of_u(u[i]);
    }

    ExtremumReport report;
    report.p_infinity = p.front();   // u = 0
    report.p_zero_delay = p.back();  // u = 1

    const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
    const double scale = std::max({std::abs(*lo), std::abs(*hi), 1.0});
    if (*hi - *lo <= 1e-14 * scale) {
        report.classification = Monotonicity::flat;
        return report;
    }

    for (int i = 1; i + 1 < grid_points; ++i) {
        const double dl = p[i] - p[i - 1];
        const double dr = p[i + 1] - p[i];
        // strict sign change; ties are treated as no bracket
        const bool is_max = dl > 0.0 && dr < 0.0;
        const bool is_min = dl < 0.0 && dr > 0.0;
        if (!is_max && !is_min) continue;
        const double u_star = golden_section(p_of_u, u[i - 1], u[i + 1], is_max);
        report.interior.push_back(Extremum{u_star, p_of_u(u_star), is_min, std::nullopt});
    }
    report.classification =
        report.interior.empty() ? Monotonicity::monotonic : Monotonicity::non_monotonic;
    return report;
}

ExtremumReport find_extrema(int photons_per_mode, Event event, const CouplerSpec& coupler,
                            int grid_points, const std::optional<OverlapModel>& model) {
    check_event(photons_per_mode, event);
    InputSpec{photons_per_mode, 1.0}.validate();
    const auto table = detection_table(photons_per_mode, coupler);
    const auto p_by_j = event_row(table, event);
    const int k = photons_per_mode;

    auto report = curve_extrema(
        [&](double u) { return combine(k, u, p_by_j); }, grid_points);
    report.event = event;
    if (model) {
        for (auto& ext : report.interior)
            ext.delay_m = ext.u > 0.0 ? delay_from_overlap(*model, ext.u)
                                      : std::numeric_limits<double>::infinity();
    }
    return report;
}

}  // namespace homsim
