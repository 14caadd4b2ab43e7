#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace rdts {

enum class Channel { AntiStokes, Stokes };

const char* channel_name(Channel c);
Channel channel_from_name(const std::string& name);

/// Slow position-dependent intensity modulation from polarization evolution
/// along the fiber. Applied identically to both channels, so the normalized
/// calibration ratio cancels it.
struct PolarizationModel {
    double modulation_depth = 0.3;  ///< in [0, 1)
    double spatial_period_m = 2.0;
    double phase_rad = 0.0;

    double factor(double arc_m) const {
        return 1.0 + modulation_depth *
                         std::sin(2.0 * M_PI * arc_m / spatial_period_m + phase_rad);
    }
};

/// Counting instrument parameters. The amplitude defaults give about 2e5
/// anti-Stokes counts per centimetre bin at 296 K over the default
/// integration time; cryo_instrument() rescales for a 77 K ambient.
struct InstrumentConfig {
    double repetition_rate_hz = 2.5e6;
    double pulse_fwhm_s = 250e-12;
    double jitter_fwhm_s = 40e-12;
    double bin_width_s = 100e-12;
    double integration_time_s = 300.0;
    double group_index = 1.468;
    double dark_rate_as_hz = 100.0;
    double dark_rate_s_hz = 100.0;
    double amplitude_as_hz = 1.944e7;
    double amplitude_s_hz = 2.4e5;
    PolarizationModel polarization;

    double period_s() const { return 1.0 / repetition_rate_hz; }
    std::size_t bin_count() const {
        return static_cast<std::size_t>(std::ceil(period_s() / bin_width_s));
    }
    /// Fiber length covered by one time bin.
    double meters_per_bin() const;
    /// Fraction of wall-clock time attributed to one bin.
    double duty_factor() const { return bin_width_s * repetition_rate_hz; }

    /// Throws ValidationError on violated invariants, including fibers longer
    /// than the unambiguous range of the repetition period.
    void validate(double total_fiber_length_m) const;
};

InstrumentConfig room_instrument();
InstrumentConfig cryo_instrument();

/// One acquired OTDR histogram: counts per time bin for one channel.
struct CountHistogram {
    double bin_width_s = 0.0;
    double integration_time_s = 0.0;
    Channel channel = Channel::AntiStokes;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;
};

}  // namespace rdts
