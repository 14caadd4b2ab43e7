#include "rdts/raman.hpp"

#include <cmath>
#include <stdexcept>

#include "rdts/constants.hpp"
#include "rdts/errors.hpp"

namespace rdts {

RamanConstants RamanConstants::from_shift(double spectral_shift_hz) {
    if (!(spectral_shift_hz > 0.0))
        throw std::domain_error("spectral shift must be positive");
    RamanConstants rc;
    rc.spectral_shift_hz = spectral_shift_hz;
    rc.c_k = constants::planck_j_s * spectral_shift_hz / constants::boltzmann_j_per_k;
    return rc;
}

double bose_occupation(double temperature_k, const RamanConstants& rc) {
    if (!(temperature_k > 0.0))
        throw std::domain_error("temperature must be positive");
    return 1.0 / std::expm1(rc.c_k / temperature_k);
}

double as_rate(double temperature_k, const ChannelCoefficients& ch,
               const RamanConstants& rc) {
    return ch.amplitude_as_hz * bose_occupation(temperature_k, rc) + ch.noise_as_hz;
}

double s_rate(double temperature_k, const ChannelCoefficients& ch,
              const RamanConstants& rc) {
    return ch.amplitude_s_hz * (1.0 + bose_occupation(temperature_k, rc)) + ch.noise_s_hz;
}

double ratio_forward(double temperature_k, const CalibrationConstants& cal) {
    if (!(temperature_k > 0.0))
        throw std::domain_error("temperature must be positive");
    return cal.c1 * std::exp(-cal.raman.c_k / temperature_k) + cal.c2;
}

std::optional<double> try_invert_temperature(double delta_ratio,
                                             const CalibrationConstants& cal) {
    const double arg = (delta_ratio - cal.c2) / cal.c1;
    if (!(arg > 0.0) || !(arg < 1.0)) return std::nullopt;
    return -cal.raman.c_k / std::log(arg);
}

double invert_temperature(double delta_ratio, const CalibrationConstants& cal) {
    const auto t = try_invert_temperature(delta_ratio, cal);
    if (!t)
        throw InvalidRatioError("delta ratio outside invertible range of the calibration curve");
    return *t;
}

double temperature_uncertainty(double delta_ratio, double sigma_ratio,
                               const CalibrationConstants& cal) {
    if (sigma_ratio < 0.0)
        throw std::domain_error("sigma_ratio must be non-negative");
    const double t = invert_temperature(delta_ratio, cal);
    return (t * t / cal.raman.c_k) * sigma_ratio / (delta_ratio - cal.c2);
}

}  // namespace rdts
