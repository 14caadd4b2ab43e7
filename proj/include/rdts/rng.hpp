#pragma once

#include <cstdint>

namespace rdts {

/// Counter-free splitmix64 stream. Cheap to construct, so every sampling
/// site can own an independent stream keyed by (seed, indices) and results
/// never depend on evaluation order.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// Order-independent key mixing for derived substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// Deterministic Poisson sample. Inversion by multiplication for small means,
/// transformed rejection (PTRS) for large ones.
std::uint64_t poisson_sample(double mean, SplitMix64& rng);

}  // namespace rdts
