#pragma once

#include <vector>

#include "rdts/instrument.hpp"
#include "rdts/raman.hpp"

namespace rdts {

/// Arc-length averaging window used for calibration, in metres from the
/// launch end of the fiber.
struct CalibrationRegion {
    double start_m = 0.0;
    double end_m = 0.0;
};

struct CalibrationPoint {
    double t_cal_k = 0.0;      ///< thermocouple reading
    double delta_ratio = 0.0;  ///< normalized anti-Stokes variation
    double sigma = 0.0;        ///< its propagated uncertainty
};

/// Expected dark counts per time bin: dark rate times integration time times
/// the bin duty factor (one over the number of bins in the trace).
double estimate_noise_floor(const CountHistogram& hist, double dark_rate_hz);

struct DeltaRatio {
    double value = 0.0;
    double sigma = 0.0;
};

/// Region-averaged normalized anti-Stokes variation
///   [mean(as_t) - mean(as_ref)] / [mean(s_t) - noise_s]
/// with Poisson propagation of all three terms. Only bins fully inside the
/// region contribute; the region must cover at least three of them.
/// Throws DegenerateError when the Stokes mean does not clear its noise
/// floor, ValidationError on mismatched histograms.
DeltaRatio compute_delta_ratio(const CountHistogram& as_t,
                               const CountHistogram& as_ref,
                               const CountHistogram& s_t,
                               const CalibrationRegion& region,
                               double noise_s_counts_per_bin,
                               double group_index);

/// Weighted least squares of delta_ratio against exp(-C/T): slope c1,
/// intercept c2. Weights are 1/sigma^2 when every point carries a positive
/// sigma, otherwise the fit is unweighted. Needs two distinct temperatures.
CalibrationConstants fit_calibration(const std::vector<CalibrationPoint>& points,
                                     double t0_k, const RamanConstants& rc);

struct CalibrationReportRow {
    double t_cal_k = 0.0;
    double delta_ratio = 0.0;
    double sigma = 0.0;
    double t_dts_k = 0.0;
    double sigma_t_k = 0.0;
    double residual_k = 0.0;
    bool valid = false;
};

/// Re-inverts every calibration point through the fitted constants.
std::vector<CalibrationReportRow> calibration_report(
    const CalibrationConstants& cal, const std::vector<CalibrationPoint>& points);

}  // namespace rdts
