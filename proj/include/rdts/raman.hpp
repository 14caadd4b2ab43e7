#pragma once

#include <optional>

namespace rdts {

/// Raman spectral shift between pump and scattered light, and the derived
/// temperature-equivalent constant C = h * shift / k_B that sets the
/// Bose-Einstein occupation of the optical phonon mode.
struct RamanConstants {
    double spectral_shift_hz = 13.0e12;
    double c_k = 0.0;  ///< C = h * spectral_shift / k_B, in kelvin

    static RamanConstants from_shift(double spectral_shift_hz);
};

/// Channel amplitudes and noise rates. The amplitudes fold together launch
/// power, Raman gain, transmission losses and detector efficiency; they carry
/// units of counts/s at unit Bose occupation and unit polarization factor.
struct ChannelCoefficients {
    double amplitude_as_hz = 0.0;  ///< A, anti-Stokes
    double amplitude_s_hz = 0.0;   ///< B, Stokes
    double noise_as_hz = 0.0;      ///< N_AS
    double noise_s_hz = 0.0;       ///< N_S
};

/// Two-constant calibration of the normalized anti-Stokes variation:
///   delta_ratio(T) ~= c1 * exp(-C/T) + c2
struct CalibrationConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    double sigma_c1 = 0.0;
    double sigma_c2 = 0.0;
    double t0_k = 296.0;  ///< reference temperature of the delta
    RamanConstants raman;
};

/// Thermal occupation 1/(exp(C/T) - 1) of the Raman-shifted phonon mode.
double bose_occupation(double temperature_k, const RamanConstants& rc);

/// Anti-Stokes count rate A/(exp(C/T) - 1) + N_AS.
/// Strictly increasing in T. Throws std::domain_error for T <= 0.
double as_rate(double temperature_k, const ChannelCoefficients& ch,
               const RamanConstants& rc);

/// Stokes count rate B*exp(C/T)/(exp(C/T) - 1) + N_S.
/// Strictly increasing in T with limit B + N_S as T -> 0.
double s_rate(double temperature_k, const ChannelCoefficients& ch,
              const RamanConstants& rc);

/// Forward calibration curve c1*exp(-C/T) + c2.
double ratio_forward(double temperature_k, const CalibrationConstants& cal);

/// Inverse of ratio_forward: T = -C / ln((r - c2)/c1).
/// Returns nullopt when (r - c2)/c1 is outside (0, 1).
std::optional<double> try_invert_temperature(double delta_ratio,
                                             const CalibrationConstants& cal);

/// Throwing variant of try_invert_temperature (InvalidRatioError).
double invert_temperature(double delta_ratio, const CalibrationConstants& cal);

/// First-order propagation of a ratio uncertainty through the inversion:
///   sigma_T = (T^2 / C) * sigma_r / (r - c2)
double temperature_uncertainty(double delta_ratio, double sigma_ratio,
                               const CalibrationConstants& cal);

}  // namespace rdts
