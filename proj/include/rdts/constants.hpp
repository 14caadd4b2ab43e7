#pragma once

#include <cmath>

namespace rdts::constants {

// CODATA 2018 exact values.
inline constexpr double planck_j_s = 6.62607015e-34;
inline constexpr double boltzmann_j_per_k = 1.380649e-23;
inline constexpr double speed_of_light_m_per_s = 299792458.0;

// FWHM of a Gaussian is 2*sqrt(2*ln 2) sigma.
inline constexpr double fwhm_per_sigma = 2.3548200450309493;

inline double fwhm_to_sigma(double fwhm) { return fwhm / fwhm_per_sigma; }

}  // namespace rdts::constants
