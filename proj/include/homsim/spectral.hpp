#pragma once

namespace homsim {

inline constexpr double speed_of_light = 299792458.0;  // m/s

/// Gaussian single-photon wave packet in the frequency domain. sigma_omega
/// is the width of the amplitude spectrum exp(-(w - w0)^2 / (2 sigma^2)),
/// in rad/s; center_omega is informational.
struct OverlapModel {
    double sigma_omega = 0.0;
    double center_omega = 0.0;
};

/// Scalar overlap of two wave packets whose arrival times differ by
/// delay_m / c:  alpha = exp(-(sigma * x / c)^2 / 4), real, in (0, 1].
/// The squared overlap is exp(-(sigma * x / c)^2 / 2).
double overlap_from_delay(const OverlapModel& model, double delay_m);

/// Non-negative delay (meters) at which the squared overlap equals
/// alpha_sq; exact inverse x = (c / sigma) * sqrt(-2 ln alpha_sq).
/// Requires 0 < alpha_sq <= 1.
double delay_from_overlap(const OverlapModel& model, double alpha_sq);

/// Amplitude-spectrum width for a Gaussian filter specified by its
/// intensity FWHM in wavelength. The intensity FWHM in angular frequency
/// is 2 pi c dl / l^2; the amplitude width is that divided by 2 sqrt(ln 2).
double sigma_from_filter(double fwhm_wavelength_m, double center_wavelength_m);

}  // namespace homsim
