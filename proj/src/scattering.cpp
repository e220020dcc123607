#include "homsim/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "homsim/combinatorics.hpp"

namespace homsim {

double CouplerSpec::reflection() const {
    // exact t = r symmetry for the balanced coupler, so that fully
    // destructive interference cancels to exactly zero
    if (is_balanced()) return transmission;
    return std::sqrt(1.0 - transmission * transmission);
}

bool CouplerSpec::is_balanced() const {
    return std::abs(transmission * transmission - 0.5) < 1e-12;
}

void CouplerSpec::validate() const {
    if (!(transmission > 0.0) || !(transmission < 1.0))
        throw std::invalid_argument("CouplerSpec: transmission must lie in (0, 1)");
}

EventDistribution::EventDistribution(std::vector<double> probs_by_m)
    : probs_(std::move(probs_by_m)) {
    if (probs_.empty())
        throw std::invalid_argument("EventDistribution: needs at least the (0,0) entry");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || p > 1.0 + 1e-12)
            throw std::invalid_argument("EventDistribution: probability outside [0, 1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("EventDistribution: probabilities do not sum to 1");
}

double EventDistribution::prob(int m, int n) const {
    if (m < 0 || n < 0 || m + n != total())
        throw std::invalid_argument("EventDistribution: event does not match the photon total");
    return probs_[m];
}

EventDistribution species_distribution(const Species& sp, const CouplerSpec& coupler) {
    coupler.validate();
    if (sp.a_count < 0 || sp.b_count < 0)
        throw std::invalid_argument("species_distribution: negative photon count");
    const int p = sp.a_count;
    const int q = sp.b_count;
    const int n_total = p + q;
    if (n_total == 0) return EventDistribution{};

    if (coupler.is_balanced()) {
        // Every monomial carries the common factor (1/sqrt 2)^N, leaving the
        // integer coefficients of (c + d)^p (c - d)^q. Interference zeros
        // cancel exactly and dyadic probabilities come out bit-exact:
        //   P(m) = n_m^2 m! (N-m)! / (p! q! 2^N).
        std::vector<std::int64_t> coeff(n_total + 1, 0);
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j)
                coeff[i + j] += binomial(p, i) * binomial(q, j) *
                                (((q - j) % 2 == 0) ? 1 : -1);
        const double denom = factorial(p) * factorial(q) * std::exp2(n_total);
        std::vector<double> probs(n_total + 1, 0.0);
        for (int m = 0; m <= n_total; ++m) {
            const double n_m = static_cast<double>(coeff[m]);
            probs[m] = n_m * n_m * factorial(m) * factorial(n_total - m) / denom;
        }
        return EventDistribution{std::move(probs)};
    }

    const double t = coupler.transmission;
    const double r = coupler.reflection();

    // amplitude(m) = sum_{i+j=m} C(p,i) C(q,j) t^i r^(p-i) r^j (-t)^(q-j)
    //               * sqrt(m! (N-m)! / (p! q!))
    std::vector<double> coeff(n_total + 1, 0.0);
    for (int i = 0; i <= p; ++i) {
        const double ai = static_cast<double>(binomial(p, i)) *
                          std::pow(t, i) * std::pow(r, p - i);
        for (int j = 0; j <= q; ++j) {
            const double bj = static_cast<double>(binomial(q, j)) *
                              std::pow(r, j) * std::pow(-t, q - j);
            coeff[i + j] += ai * bj;
        }
    }

    const double input_norm = factorial(p) * factorial(q);
    std::vector<double> probs(n_total + 1, 0.0);
    double sum = 0.0;
    for (int m = 0; m <= n_total; ++m) {
        const double amp_sq = coeff[m] * coeff[m] *
                              factorial(m) * factorial(n_total - m) / input_norm;
        probs[m] = amp_sq;
        sum += amp_sq;
    }
    // renormalize away the accumulated rounding; the residual is < 1e-13
    for (double& v : probs) v /= sum;
    return EventDistribution{std::move(probs)};
}

EventDistribution convolve(std::span<const EventDistribution> dists) {
    if (dists.empty())
        throw std::invalid_argument("convolve: empty distribution list");
    std::vector<double> acc(dists.front().probs_by_m().begin(),
                            dists.front().probs_by_m().end());
    for (std::size_t d = 1; d < dists.size(); ++d) {
        const auto next = dists[d].probs_by_m();
        std::vector<double> out(acc.size() + next.size() - 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < next.size(); ++j)
                out[i + j] += acc[i] * next[j];
        acc = std::move(out);
    }
    return EventDistribution{std::move(acc)};
}

std::vector<EventDistribution> detection_table(int photons_per_mode,
                                               const CouplerSpec& coupler) {
    if (photons_per_mode < 1)
        throw std::invalid_argument("detection_table: need at least one photon per mode");
    const int k = photons_per_mode;
    std::vector<EventDistribution> table;
    table.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
        std::vector<EventDistribution> parts;
        parts.push_back(species_distribution(Species{k, j}, coupler));
        if (j < k)
            parts.push_back(species_distribution(Species{0, k - j}, coupler));
        table.push_back(convolve(parts));
    }
    return table;
}

}  // namespace homsim
