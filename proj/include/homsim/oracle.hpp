#pragma once

#include <array>
#include <complex>
#include <map>

#include "homsim/assembly.hpp"
#include "homsim/scattering.hpp"

namespace homsim {

/// Occupations of the four modes {first spatial, second spatial} x
/// {reference temporal mode e1, orthogonal complement e2}, ordered
/// (a_e1, a_e2, b_e1, b_e2) on input and (c_e1, c_e2, d_e1, d_e2) after
/// the coupler.
using Occupation = std::array<int, 4>;

/// Brute-force Fock state over the four modes: occupation -> amplitude.
/// Deliberately independent of the species/convolution machinery.
struct MultimodeState {
    std::map<Occupation, std::complex<double>> amplitudes;

    double norm_sq() const;
    /// Photon number shared by all occupied basis states; -1 when empty.
    int total_photons() const;
};

/// (a_e1^dag)^k (alpha b_e1^dag + sqrt(1-alpha^2) b_e2^dag)^k |0>,
/// normalized, expanded by exact multinomial algebra.
MultimodeState prepare(int photons_per_mode, double alpha);

/// Applies the coupler to the spatial index of every mode, identically for
/// each temporal mode, re-expanding in the output occupation basis.
MultimodeState evolve(const MultimodeState& state, const CouplerSpec& coupler);

/// P(m, n) with the unobserved temporal modes marginalized out.
double oracle_event_probability(int photons_per_mode, double alpha, Event event,
                                const CouplerSpec& coupler);

}  // namespace homsim
