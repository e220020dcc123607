#include "homsim/exact.hpp"

#include <stdexcept>

#include "homsim/combinatorics.hpp"

namespace homsim {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial_int(int n) {
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::string to_string(const Fraction& f) {
    if (denominator(f) == 1) return numerator(f).str();
    return numerator(f).str() + "/" + denominator(f).str();
}

std::vector<Fraction> species_distribution_exact(const Species& sp) {
    if (sp.a_count < 0 || sp.b_count < 0)
        throw std::invalid_argument("species_distribution_exact: negative photon count");
    const int p = sp.a_count;
    const int q = sp.b_count;
    const int n_total = p + q;
    if (n_total == 0) return {Fraction(1)};

    // (c + d)^p (c - d)^q: integer coefficient of c^m d^(N-m), with the
    // common factor (1/sqrt(2))^N pulled out front.
    std::vector<cpp_int> coeff(n_total + 1, 0);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            const cpp_int term = cpp_int(binomial(p, i)) * binomial(q, j) *
                                 (((q - j) % 2 == 0) ? 1 : -1);
            coeff[i + j] += term;
        }

    const cpp_int input_norm = factorial_int(p) * factorial_int(q);
    const cpp_int two_pow = cpp_int(1) << n_total;
    std::vector<Fraction> probs(n_total + 1);
    for (int m = 0; m <= n_total; ++m) {
        const cpp_int num = coeff[m] * coeff[m] * factorial_int(m) * factorial_int(n_total - m);
        probs[m] = Fraction(num, input_norm * two_pow);
    }
    return probs;
}

std::vector<Fraction> convolve_exact(std::span<const std::vector<Fraction>> dists) {
    if (dists.empty())
        throw std::invalid_argument("convolve_exact: empty distribution list");
    std::vector<Fraction> acc = dists.front();
    for (std::size_t d = 1; d < dists.size(); ++d) {
        const auto& next = dists[d];
        std::vector<Fraction> out(acc.size() + next.size() - 1, Fraction(0));
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < next.size(); ++j)
                out[i + j] += acc[i] * next[j];
        acc = std::move(out);
    }
    return acc;
}

std::vector<std::vector<Fraction>> detection_table_exact(int photons_per_mode) {
    if (photons_per_mode < 1)
        throw std::invalid_argument("detection_table_exact: need at least one photon per mode");
    const int k = photons_per_mode;
    std::vector<std::vector<Fraction>> table;
    table.reserve(k + 1);
    for (int j = 0; j <= k; ++j) {
        std::vector<std::vector<Fraction>> parts;
        parts.push_back(species_distribution_exact(Species{k, j}));
        if (j < k)
            parts.push_back(species_distribution_exact(Species{0, k - j}));
        table.push_back(convolve_exact(parts));
    }
    return table;
}

}  // namespace homsim
