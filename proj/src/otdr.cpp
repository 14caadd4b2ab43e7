#include "rdts/otdr.hpp"

#include <cmath>
#include <stdexcept>

#include "rdts/constants.hpp"
#include "rdts/rng.hpp"

namespace rdts {

double time_to_position(double time_s, double group_index) {
    if (time_s < 0.0) throw std::domain_error("time must be non-negative");
    return constants::speed_of_light_m_per_s * time_s / (2.0 * group_index);
}

namespace {

std::vector<double> gaussian_kernel_bins(double sigma_bins) {
    const int radius = std::max(1, static_cast<int>(std::ceil(6.0 * sigma_bins)));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (i / sigma_bins) * (i / sigma_bins));
        k[i + radius] = v;
        sum += v;
    }
    for (double& v : k) v /= sum;
    return k;
}

}  // namespace

std::vector<double> expected_counts(const BoardModel& board,
                                    const FiberLayout& layout,
                                    const InstrumentConfig& instrument,
                                    Channel channel) {
    board.validate();
    layout.validate(board);
    instrument.validate(layout.total_length_m);

    const std::size_t n = instrument.bin_count();
    const TemperatureField field(board, layout);
    const auto raman = RamanConstants::from_shift(13.0e12);

    const double amplitude = channel == Channel::AntiStokes
                                 ? instrument.amplitude_as_hz
                                 : instrument.amplitude_s_hz;
    const double dark = channel == Channel::AntiStokes ? instrument.dark_rate_as_hz
                                                       : instrument.dark_rate_s_hz;

    std::vector<double> rate(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) * instrument.bin_width_s;
        const double x = time_to_position(t, instrument.group_index);
        if (x > layout.total_length_m) continue;  // past the fiber end
        const double occupation = bose_occupation(field(x), raman);
        const double channel_factor =
            channel == Channel::AntiStokes ? occupation : 1.0 + occupation;
        rate[i] = amplitude * instrument.polarization.factor(x) * channel_factor;
    }

    // Pulse shape and detector jitter blur the trace in time; both are
    // Gaussian so they combine in quadrature. The trace repeats with the
    // laser period, hence circular convolution.
    const double fwhm_t = std::hypot(instrument.pulse_fwhm_s, instrument.jitter_fwhm_s);
    const double sigma_bins =
        constants::fwhm_to_sigma(fwhm_t) / instrument.bin_width_s;
    const auto kernel = gaussian_kernel_bins(sigma_bins);
    const int radius = static_cast<int>(kernel.size() / 2);

    const double exposure = instrument.integration_time_s * instrument.duty_factor();
    std::vector<double> expected(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double blurred = 0.0;
        for (int j = -radius; j <= radius; ++j)
            blurred += rate[(i + n + j) % n] * kernel[j + radius];
        expected[i] = (blurred + dark) * exposure;
    }
    return expected;
}

CountHistogram simulate_trace(const BoardModel& board, const FiberLayout& layout,
                              const InstrumentConfig& instrument, Channel channel,
                              std::uint64_t seed) {
    const auto expected = expected_counts(board, layout, instrument, channel);

    CountHistogram hist;
    hist.bin_width_s = instrument.bin_width_s;
    hist.integration_time_s = instrument.integration_time_s;
    hist.channel = channel;
    hist.seed = seed;
    hist.counts.resize(expected.size());

    const std::uint64_t channel_tag = channel == Channel::AntiStokes ? 1 : 2;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        SplitMix64 stream(mix_seed(seed, channel_tag, i));
        hist.counts[i] = poisson_sample(expected[i], stream);
    }
    return hist;
}

}  // namespace rdts
