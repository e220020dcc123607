#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "homsim/scattering.hpp"
#include "homsim/spectral.hpp"

namespace homsim {

/// Hard cap on photons per input mode; keeps the binomial weights inside
/// the exact integer table.
inline constexpr int max_photons_per_mode = 32;

/// k photons in each of the two input modes (N = 2k in total) and the
/// wave-packet overlap alpha. Only alpha^2 enters any observable, so the
/// sign of alpha is immaterial.
struct InputSpec {
    int photons_per_mode = 1;
    double alpha = 1.0;

    void validate() const;
};

enum class TypeLabel { indis, inter, dist };

std::string_view to_string(TypeLabel label);

/// One branch of the orthogonal decomposition of the delayed k-photon
/// mode: j of its photons are projected onto the reference temporal mode,
/// the remaining k - j onto the orthogonal complement.
struct ComponentTerm {
    int j = 0;
    double weight = 0.0;  // C(k,j) u^j (1-u)^(k-j), u = alpha^2
    TypeLabel label = TypeLabel::indis;
    std::vector<Species> species;  // {(k, j)} and, for j < k, {(0, k - j)}
};

/// All k + 1 orthogonal components, ordered by j descending (the strictly
/// indistinguishable branch first). Weights sum to 1; exactly k - 1 of the
/// components carry the `inter` label.
std::vector<ComponentTerm> decompose(const InputSpec& spec);

struct WeightRow {
    double x = 0.0;         // delay in meters
    double alpha_sq = 0.0;
    std::vector<double> per_j;  // ordered j = k .. 0, matching decompose()
    double indis = 0.0;
    double inter = 0.0;  // sum over 0 < j < k
    double dist = 0.0;
};

/// Weights along a delay scan; one row per entry of delays_m.
std::vector<WeightRow> weight_curves(int photons_per_mode, const OverlapModel& model,
                                     std::span<const double> delays_m);

}  // namespace homsim
