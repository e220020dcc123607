#include "homsim/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "homsim/combinatorics.hpp"

namespace homsim {

double MultimodeState::norm_sq() const {
    double total = 0.0;
    for (const auto& [occ, amp] : amplitudes) total += std::norm(amp);
    return total;
}

int MultimodeState::total_photons() const {
    if (amplitudes.empty()) return -1;
    const auto& occ = amplitudes.begin()->first;
    return occ[0] + occ[1] + occ[2] + occ[3];
}

MultimodeState prepare(int photons_per_mode, double alpha) {
    if (photons_per_mode < 1)
        throw std::invalid_argument("prepare: need at least one photon per mode");
    if (!(std::abs(alpha) <= 1.0))
        throw std::invalid_argument("prepare: |alpha| must not exceed 1");
    const int k = photons_per_mode;
    const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));

    MultimodeState state;
    for (int j = 0; j <= k; ++j) {
        // (alpha b1 + beta b2)^k picks C(k,j) alpha^j beta^(k-j) b1^j b2^(k-j);
        // together with (a1)^k and the 1/k! normalization the basis
        // amplitude reduces to sqrt(C(k,j)) alpha^j beta^(k-j).
        const double amp = std::sqrt(static_cast<double>(binomial(k, j))) *
                           std::pow(alpha, j) * std::pow(beta, k - j);
        if (amp == 0.0) continue;
        state.amplitudes[{k, 0, j, k - j}] = amp;
    }
    return state;
}

MultimodeState evolve(const MultimodeState& state, const CouplerSpec& coupler) {
    coupler.validate();
    const double t = coupler.transmission;
    const double r = coupler.reflection();

    MultimodeState out;
    for (const auto& [occ, amp] : state.amplitudes) {
        const auto [na1, na2, nb1, nb2] = occ;
        const double in_norm =
            std::sqrt(factorial(na1) * factorial(na2) * factorial(nb1) * factorial(nb2));
        // expand (t c + r d)^na (r c - t d)^nb independently per temporal mode
        for (int i1 = 0; i1 <= na1; ++i1)
            for (int i2 = 0; i2 <= na2; ++i2)
                for (int i3 = 0; i3 <= nb1; ++i3)
                    for (int i4 = 0; i4 <= nb2; ++i4) {
                        const double coeff =
                            static_cast<double>(binomial(na1, i1)) * std::pow(t, i1) *
                            std::pow(r, na1 - i1) *
                            static_cast<double>(binomial(na2, i2)) * std::pow(t, i2) *
                            std::pow(r, na2 - i2) *
                            static_cast<double>(binomial(nb1, i3)) * std::pow(r, i3) *
                            std::pow(-t, nb1 - i3) *
                            static_cast<double>(binomial(nb2, i4)) * std::pow(r, i4) *
                            std::pow(-t, nb2 - i4);
                        const Occupation target{i1 + i3, i2 + i4,
                                                na1 - i1 + nb1 - i3, na2 - i2 + nb2 - i4};
                        const double out_norm =
                            std::sqrt(factorial(target[0]) * factorial(target[1]) *
                                      factorial(target[2]) * factorial(target[3]));
                        out.amplitudes[target] += amp * coeff * out_norm / in_norm;
                    }
    }
    // drop entries that cancelled to numerical zero
    std::erase_if(out.amplitudes,
                  [](const auto& entry) { return std::norm(entry.second) < 1e-60; });
    return out;
}

double oracle_event_probability(int photons_per_mode, double alpha, Event event,
                                const CouplerSpec& coupler) {
    if (event.m < 0 || event.n < 0 || event.m + event.n != 2 * photons_per_mode)
        throw std::invalid_argument("oracle_event_probability: event does not match 2k photons");
    const MultimodeState out = evolve(prepare(photons_per_mode, alpha), coupler);
    double total = 0.0;
    for (const auto& [occ, amp] : out.amplitudes)
        if (occ[0] + occ[1] == event.m) total += std::norm(amp);
    return total;
}

}  // namespace homsim
