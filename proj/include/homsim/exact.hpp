#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homsim/scattering.hpp"

namespace homsim {

/// Exact-rational counterpart of the floating-point scattering path,
/// restricted to the balanced coupler where every amplitude is an integer
/// multiple of a power of 1/sqrt(2).
using Fraction = boost::multiprecision::cpp_rational;

/// "0", "1/2", "3/16", ...
std::string to_string(const Fraction& f);

/// Balanced-coupler species distribution as exact rationals, indexed by m.
std::vector<Fraction> species_distribution_exact(const Species& sp);

std::vector<Fraction> convolve_exact(std::span<const std::vector<Fraction>> dists);

/// Exact per-type detection probabilities, entry [j][m] for j = 0..k.
std::vector<std::vector<Fraction>> detection_table_exact(int photons_per_mode);

}  // namespace homsim
