#include "homsim/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "homsim/combinatorics.hpp"

namespace homsim {

void InputSpec::validate() const {
    if (photons_per_mode < 1)
        throw std::invalid_argument("InputSpec: need at least one photon per mode");
    if (photons_per_mode > max_photons_per_mode)
        throw std::invalid_argument("InputSpec: photons_per_mode exceeds the exact binomial range");
    if (!(std::abs(alpha) <= 1.0))
        throw std::invalid_argument("InputSpec: |alpha| must not exceed 1");
}

std::string_view to_string(TypeLabel label) {
    switch (label) {
        case TypeLabel::indis: return "indis";
        case TypeLabel::inter: return "inter";
        case TypeLabel::dist: return "dist";
    }
    throw std::logic_error("to_string: unknown TypeLabel");
}

std::vector<ComponentTerm> decompose(const InputSpec& spec) {
    spec.validate();
    const int k = spec.photons_per_mode;
    const double u = spec.alpha * spec.alpha;

    std::vector<ComponentTerm> terms;
    terms.reserve(k + 1);
    for (int j = k; j >= 0; --j) {
        ComponentTerm term;
        term.j = j;
        term.weight = static_cast<double>(binomial(k, j)) *
                      std::pow(u, j) * std::pow(1.0 - u, k - j);
        term.label = (j == k) ? TypeLabel::indis
                              : (j == 0) ? TypeLabel::dist
                                         : TypeLabel::inter;
        term.species.push_back(Species{k, j});
        if (j < k) term.species.push_back(Species{0, k - j});
        terms.push_back(std::move(term));
    }
    return terms;
}

std::vector<WeightRow> weight_curves(int photons_per_mode, const OverlapModel& model,
                                     std::span<const double> delays_m) {
    std::vector<WeightRow> rows;
    rows.reserve(delays_m.size());
    for (double x : delays_m) {
        const double alpha = overlap_from_delay(model, x);
        const auto terms = decompose(InputSpec{photons_per_mode, alpha});
        WeightRow row;
        row.x = x;
        row.alpha_sq = alpha * alpha;
        row.per_j.reserve(terms.size());
        for (const auto& term : terms) {
            row.per_j.push_back(term.weight);
            switch (term.label) {
                case TypeLabel::indis: row.indis += term.weight; break;
                case TypeLabel::inter: row.inter += term.weight; break;
                case TypeLabel::dist: row.dist += term.weight; break;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace homsim
