#pragma once

#include "srs/constants.hpp"
#include "srs/errors.hpp"

namespace srs {

// lambda (vacuum, m) -> angular frequency (rad/s)
inline double wavelength_to_omega(double lambda_m) {
    if (!(lambda_m > 0.0)) throw ValidationError("wavelength must be > 0");
    return 2.0 * constants::pi * constants::c / lambda_m;
}

// angular frequency (rad/s) -> lambda (vacuum, m)
inline double omega_to_wavelength(double omega) {
    if (!(omega > 0.0)) throw ValidationError("angular frequency must be > 0");
    return 2.0 * constants::pi * constants::c / omega;
}

// wavenumber (cm^-1) -> angular frequency (rad/s)
inline double wavenumber_cm_to_omega(double wavenumber_cm) {
    return 2.0 * constants::pi * constants::c * 100.0 * wavenumber_cm;
}

// Peak intensity of a Gaussian beam of power P focused to a 1/e^2 intensity
// radius w0:  I = 2P/(pi w0^2).
inline double peak_intensity(double power_w, double waist_m) {
    if (!(power_w >= 0.0)) throw ValidationError("power must be >= 0");
    if (!(waist_m > 0.0)) throw ValidationError("waist must be > 0");
    return 2.0 * power_w / (constants::pi * waist_m * waist_m);
}

} // namespace srs
