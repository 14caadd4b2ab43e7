#include "rdts/instrument.hpp"

#include "rdts/constants.hpp"
#include "rdts/errors.hpp"

namespace rdts {

const char* channel_name(Channel c) {
    return c == Channel::AntiStokes ? "AS" : "S";
}

Channel channel_from_name(const std::string& name) {
    if (name == "AS") return Channel::AntiStokes;
    if (name == "S") return Channel::Stokes;
    throw ValidationError("unknown channel name: " + name);
}

double InstrumentConfig::meters_per_bin() const {
    return constants::speed_of_light_m_per_s * bin_width_s / (2.0 * group_index);
}

void InstrumentConfig::validate(double total_fiber_length_m) const {
    if (!(repetition_rate_hz > 0.0))
        throw ValidationError("repetition rate must be positive");
    if (!(bin_width_s > 0.0)) throw ValidationError("bin width must be positive");
    if (!(pulse_fwhm_s > 0.0)) throw ValidationError("pulse width must be positive");
    if (jitter_fwhm_s < 0.0) throw ValidationError("jitter must be non-negative");
    if (!(group_index >= 1.0)) throw ValidationError("group index must be >= 1");
    if (!(integration_time_s >= 0.0))
        throw ValidationError("integration time must be non-negative");
    if (dark_rate_as_hz < 0.0 || dark_rate_s_hz < 0.0 || amplitude_as_hz < 0.0 ||
        amplitude_s_hz < 0.0)
        throw ValidationError("rates must be non-negative");
    if (!(polarization.modulation_depth >= 0.0) || polarization.modulation_depth >= 1.0)
        throw ValidationError("polarization modulation depth must lie in [0, 1)");
    if (!(polarization.spatial_period_m > 0.0))
        throw ValidationError("polarization period must be positive");

    const double round_trip_s = 2.0 * group_index * total_fiber_length_m /
                                constants::speed_of_light_m_per_s;
    if (round_trip_s >= period_s())
        throw ValidationError(
            "fiber exceeds the unambiguous range of the repetition period");
}

InstrumentConfig room_instrument() { return InstrumentConfig{}; }

InstrumentConfig cryo_instrument() {
    InstrumentConfig cfg;
    // Launch power raised so the anti-Stokes channel keeps usable counts
    // against the collapsed 77 K Bose occupation. Same A/B ratio as at room.
    cfg.amplitude_as_hz = 1.782e9;
    cfg.amplitude_s_hz = 2.2e7;
    return cfg;
}

}  // namespace rdts
