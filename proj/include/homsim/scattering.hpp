#pragma once

#include <span>
#include <vector>

namespace homsim {

/// Lossless two-mode coupler with real amplitudes and the sign convention
///   a -> t c + r d,   b -> r c - t d,   r = sqrt(1 - t^2).
struct CouplerSpec {
    double transmission = 0.70710678118654752440;  // 1/sqrt(2), balanced

    double reflection() const;
    bool is_balanced() const;
    void validate() const;  // throws std::invalid_argument unless t in (0, 1)
};

/// A maximal set of mutually indistinguishable photons: a_count in input
/// mode a and b_count in input mode b. Different species do not interfere;
/// their output counts add.
struct Species {
    int a_count = 0;
    int b_count = 0;

    int total() const { return a_count + b_count; }
};

/// Normalized distribution over output events (m, n) with m + n = total().
/// Stored densely by the first-mode count m.
class EventDistribution {
public:
    EventDistribution() = default;  // the empty event {(0,0): 1}
    explicit EventDistribution(std::vector<double> probs_by_m);

    int total() const { return static_cast<int>(probs_.size()) - 1; }
    double prob(int m, int n) const;  // throws unless m + n == total()
    std::span<const double> probs_by_m() const { return probs_; }

private:
    std::vector<double> probs_{1.0};
};

/// Output distribution of one species scattered on the coupler, by exact
/// polynomial expansion of (t c + r d)^p (r c - t d)^q with Fock
/// normalization. Floating error stays below 1e-13 at desk scale.
EventDistribution species_distribution(const Species& sp, const CouplerSpec& coupler);

/// Distribution of the combined output counts of independent species.
EventDistribution convolve(std::span<const EventDistribution> dists);

/// Detection probabilities per distinguishability type for k photons in
/// each input mode: entry j (0..k) is the distribution of the component
/// with species (a: k, b: j) and, for j < k, (a: 0, b: k - j).
std::vector<EventDistribution> detection_table(int photons_per_mode,
                                               const CouplerSpec& coupler);

}  // namespace homsim
