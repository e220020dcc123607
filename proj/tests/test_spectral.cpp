#include <doctest.h>

#include <cmath>
#include <limits>

#include "homsim/spectral.hpp"
#include <initializer_list>
#include <stdexcept>

using namespace homsim;

namespace {
const OverlapModel unit_model{1e13, 0.0};
}

TEST_SUITE("spectral") {

TEST_CASE("zero delay gives unit overlap") {
    CHECK(overlap_from_delay(unit_model, 0.0) == 1.0);
}

TEST_CASE("squared overlap is exp(-1) at sigma*x/c = sqrt(2)") {
    const double x = std::sqrt(2.0) * speed_of_light / unit_model.sigma_omega;
    const double alpha = overlap_from_delay(unit_model, x);
    CHECK(alpha * alpha == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("overlap is even, decreasing in |x|, and in (0, 1]") {
    double prev = 1.0;
    for (double x : {1e-6, 2e-6, 5e-6, 2e-5, 1e-4, 5e-4}) {
        const double a = overlap_from_delay(unit_model, x);
        CHECK(a == overlap_from_delay(unit_model, -x));
        CHECK(a > 0.0);
        CHECK(a < prev);
        prev = a;
    }
}

TEST_CASE("squared overlap matches the Gaussian form to machine precision") {
    for (double x : {0.0, 3e-6, 1.7e-5, 9e-5, 4e-4}) {
        const double a = overlap_from_delay(unit_model, x);
        const double s = unit_model.sigma_omega * x / speed_of_light;
        CHECK(a * a == doctest::Approx(std::exp(-0.5 * s * s)).epsilon(1e-15));
    }
}

TEST_CASE("delay_from_overlap inverts the squared overlap") {
    CHECK(delay_from_overlap(unit_model, 1.0) == 0.0);

    const double x_e = delay_from_overlap(unit_model, std::exp(-1.0));
    CHECK(x_e == doctest::Approx(std::sqrt(2.0) * speed_of_light / unit_model.sigma_omega)
                     .epsilon(1e-14));

    for (double u : {0.1, 0.5, 0.9}) {
        const double a = overlap_from_delay(unit_model, delay_from_overlap(unit_model, u));
        CHECK(a * a == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("domain errors are rejected") {
    CHECK_THROWS_AS(overlap_from_delay(unit_model, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(overlap_from_delay(unit_model, std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK_THROWS_AS(overlap_from_delay(OverlapModel{0.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(overlap_from_delay(OverlapModel{-1e12, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delay_from_overlap(unit_model, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(delay_from_overlap(unit_model, -0.3), std::invalid_argument);
    CHECK_THROWS_AS(delay_from_overlap(unit_model, 1.0 + 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(sigma_from_filter(0.0, 780e-9), std::invalid_argument);
    CHECK_THROWS_AS(sigma_from_filter(4e-9, -780e-9), std::invalid_argument);
}

TEST_CASE("filter conversion reproduces the 4 nm / 780 nm case") {
    const double sigma = sigma_from_filter(4e-9, 780e-9);
    // independent arithmetic: 2 pi c dl / l^2 / (2 sqrt(ln 2))
    const double fwhm_omega = 2.0 * 3.14159265358979323846 * 299792458.0 * 4e-9 /
                              (780e-9 * 780e-9);
    CHECK(fwhm_omega == doctest::Approx(1.239e13).epsilon(1e-3));
    CHECK(sigma == doctest::Approx(fwhm_omega / (2.0 * std::sqrt(std::log(2.0))))
                       .epsilon(1e-14));
    CHECK(sigma == doctest::Approx(7.437528296648e12).epsilon(1e-12));
}

TEST_CASE("filter conversion scales linearly in FWHM and as 1/lambda^2") {
    const double base = sigma_from_filter(4e-9, 780e-9);
    CHECK(sigma_from_filter(8e-9, 780e-9) == doctest::Approx(2.0 * base).epsilon(1e-14));
    CHECK(sigma_from_filter(4e-9, 1560e-9) == doctest::Approx(base / 4.0).epsilon(1e-14));
}

TEST_CASE("4 nm / 780 nm decay scale sits in the tens-of-um range") {
    // loose sanity window for the unit conversions: the half-overlap delay
    const OverlapModel model{sigma_from_filter(4e-9, 780e-9), 0.0};
    const double x_half = delay_from_overlap(model, 0.5);
    CHECK(x_half > 30e-6);
    CHECK(x_half < 80e-6);
}

}  // TEST_SUITE
