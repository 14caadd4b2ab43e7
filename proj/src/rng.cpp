#include "rdts/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rdts {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 m(seed);
    std::uint64_t h = m.next() ^ (a + 0x9e3779b97f4a7c15ULL);
    SplitMix64 m2(h);
    return m2.next() ^ (b + 0x517cc1b727220a95ULL);
}

namespace {

std::uint64_t poisson_small(double mean, SplitMix64& rng) {
    // Knuth: count uniforms until their product drops below exp(-mean).
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = rng.uniform();
    while (p > limit) {
        ++k;
        p *= rng.uniform();
    }
    return k;
}

std::uint64_t poisson_ptrs(double mean, SplitMix64& rng) {
    // Hormann's transformed rejection with squeeze, valid for mean >= 10.
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
            kf * loglam - mean - std::lgamma(kf + 1.0))
            return static_cast<std::uint64_t>(kf);
    }
}

}  // namespace

std::uint64_t poisson_sample(double mean, SplitMix64& rng) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::domain_error("poisson mean must be finite and non-negative");
    if (mean == 0.0) return 0;
    if (mean < 10.0) return poisson_small(mean, rng);
    return poisson_ptrs(mean, rng);
}

}  // namespace rdts
