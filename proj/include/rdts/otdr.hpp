#pragma once

#include <cstdint>
#include <vector>

#include "rdts/board.hpp"
#include "rdts/instrument.hpp"
#include "rdts/raman.hpp"

namespace rdts {

/// Round-trip time-of-flight mapping x = c * t / (2 n_g).
double time_to_position(double time_s, double group_index);

/// Expected (noise-free) counts per time bin for one channel: the per-bin
/// channel rate with the polarization factor applied, blurred by the combined
/// pulse-plus-jitter Gaussian on the periodic trace, plus the flat dark rate,
/// scaled by integration time and the bin duty factor.
std::vector<double> expected_counts(const BoardModel& board,
                                    const FiberLayout& layout,
                                    const InstrumentConfig& instrument,
                                    Channel channel);

/// Draws one histogram around expected_counts. Each bin uses an independent
/// substream keyed by (seed, channel, bin index); identical inputs and seed
/// give bit-identical output under any evaluation order.
CountHistogram simulate_trace(const BoardModel& board, const FiberLayout& layout,
                              const InstrumentConfig& instrument, Channel channel,
                              std::uint64_t seed);

}  // namespace rdts
