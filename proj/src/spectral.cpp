#include "homsim/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace homsim {

namespace {

void check_model(const OverlapModel& model) {
    if (!(model.sigma_omega > 0.0) || !std::isfinite(model.sigma_omega))
        throw std::invalid_argument("OverlapModel: sigma_omega must be positive and finite");
}

}  // namespace

double overlap_from_delay(const OverlapModel& model, double delay_m) {
    check_model(model);
    if (!std::isfinite(delay_m))
        throw std::invalid_argument("overlap_from_delay: delay must be finite");
    const double s = model.sigma_omega * delay_m / speed_of_light;
    return std::exp(-0.25 * s * s);
}

double delay_from_overlap(const OverlapModel& model, double alpha_sq) {
    check_model(model);
    if (!(alpha_sq > 0.0) || alpha_sq > 1.0)
        throw std::invalid_argument("delay_from_overlap: alpha_sq must lie in (0, 1]");
    return speed_of_light / model.sigma_omega * std::sqrt(-2.0 * std::log(alpha_sq));
}

double sigma_from_filter(double fwhm_wavelength_m, double center_wavelength_m) {
    if (!(fwhm_wavelength_m > 0.0) || !(center_wavelength_m > 0.0))
        throw std::invalid_argument("sigma_from_filter: wavelengths must be positive");
    const double fwhm_omega = 2.0 * std::numbers::pi * speed_of_light * fwhm_wavelength_m /
                              (center_wavelength_m * center_wavelength_m);
    return fwhm_omega / (2.0 * std::sqrt(std::numbers::ln2));
}

}  // namespace homsim
