#include "rdts/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rdts/constants.hpp"
#include "rdts/errors.hpp"

namespace rdts {

double estimate_noise_floor(const CountHistogram& hist, double dark_rate_hz) {
    if (hist.counts.empty()) throw ValidationError("empty histogram");
    if (dark_rate_hz < 0.0) throw ValidationError("dark rate must be non-negative");
    return dark_rate_hz * hist.integration_time_s /
           static_cast<double>(hist.counts.size());
}

namespace {

void check_aligned(const CountHistogram& a, const CountHistogram& b) {
    if (a.counts.size() != b.counts.size() || a.bin_width_s != b.bin_width_s)
        throw ValidationError("histograms differ in binning");
}

}  // namespace

DeltaRatio compute_delta_ratio(const CountHistogram& as_t,
                               const CountHistogram& as_ref,
                               const CountHistogram& s_t,
                               const CalibrationRegion& region,
                               double noise_s_counts_per_bin,
                               double group_index) {
    check_aligned(as_t, as_ref);
    check_aligned(as_t, s_t);
    if (!(region.end_m > region.start_m))
        throw ValidationError("calibration region must have positive extent");

    const double meters_per_bin = constants::speed_of_light_m_per_s *
                                  as_t.bin_width_s / (2.0 * group_index);
    // Bins fully inside the region; partial bins are excluded.
    const auto first = static_cast<std::ptrdiff_t>(
        std::ceil(region.start_m / meters_per_bin - 1e-9));
    const auto last = static_cast<std::ptrdiff_t>(
        std::floor(region.end_m / meters_per_bin + 1e-9));  // one past
    const auto n_total = static_cast<std::ptrdiff_t>(as_t.counts.size());
    const auto lo = std::max<std::ptrdiff_t>(first, 0);
    const auto hi = std::min(last, n_total);
    if (hi - lo < 3)
        throw ValidationError("calibration region must cover at least 3 bins");

    double sum_t = 0.0, sum_ref = 0.0, sum_s = 0.0;
    for (auto i = lo; i < hi; ++i) {
        sum_t += static_cast<double>(as_t.counts[i]);
        sum_ref += static_cast<double>(as_ref.counts[i]);
        sum_s += static_cast<double>(s_t.counts[i]);
    }
    const double n = static_cast<double>(hi - lo);
    const double mean_t = sum_t / n;
    const double mean_ref = sum_ref / n;
    const double mean_s = sum_s / n;

    const double denom = mean_s - noise_s_counts_per_bin;
    if (!(denom > 0.0))
        throw DegenerateError("Stokes signal does not clear its noise floor");

    DeltaRatio out;
    out.value = (mean_t - mean_ref) / denom;
    // Poisson: var(mean) = sum(counts) / n^2 for each of the three terms.
    const double var_num = (sum_t + sum_ref) / (n * n);
    const double var_s = sum_s / (n * n);
    out.sigma = std::sqrt(var_num / (denom * denom) +
                          out.value * out.value * var_s / (denom * denom));
    return out;
}

CalibrationConstants fit_calibration(const std::vector<CalibrationPoint>& points,
                                     double t0_k, const RamanConstants& rc) {
    std::set<double> temps;
    for (const auto& p : points) temps.insert(p.t_cal_k);
    if (temps.size() < 2)
        throw DegenerateError("calibration fit needs at least two distinct temperatures");

    const bool weighted =
        std::all_of(points.begin(), points.end(),
                    [](const CalibrationPoint& p) { return p.sigma > 0.0; });

    double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double w = weighted ? 1.0 / (p.sigma * p.sigma) : 1.0;
        const double x = std::exp(-rc.c_k / p.t_cal_k);
        sw += w;
        sx += w * x;
        sy += w * p.delta_ratio;
        sxx += w * x * x;
        sxy += w * x * p.delta_ratio;
    }
    const double det = sw * sxx - sx * sx;
    if (!(det > 0.0) || !std::isfinite(det))
        throw DegenerateError("singular calibration fit");

    CalibrationConstants cal;
    cal.raman = rc;
    cal.t0_k = t0_k;
    cal.c1 = (sw * sxy - sx * sy) / det;
    cal.c2 = (sxx * sy - sx * sxy) / det;

    double var_c1 = sw / det;
    double var_c2 = sxx / det;
    if (!weighted) {
        // Scale by the residual variance; with two points the fit is exact.
        double rss = 0.0;
        for (const auto& p : points) {
            const double x = std::exp(-rc.c_k / p.t_cal_k);
            const double r = p.delta_ratio - cal.c1 * x - cal.c2;
            rss += r * r;
        }
        const double dof = static_cast<double>(points.size()) - 2.0;
        const double s2 = dof > 0.0 ? rss / dof : 0.0;
        var_c1 *= s2;
        var_c2 *= s2;
    }
    cal.sigma_c1 = std::sqrt(var_c1);
    cal.sigma_c2 = std::sqrt(var_c2);
    return cal;
}

std::vector<CalibrationReportRow> calibration_report(
    const CalibrationConstants& cal, const std::vector<CalibrationPoint>& points) {
    std::vector<CalibrationReportRow> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        CalibrationReportRow row;
        row.t_cal_k = p.t_cal_k;
        row.delta_ratio = p.delta_ratio;
        row.sigma = p.sigma;
        if (const auto t = try_invert_temperature(p.delta_ratio, cal)) {
            row.valid = true;
            row.t_dts_k = *t;
            row.sigma_t_k = temperature_uncertainty(p.delta_ratio, p.sigma, cal);
            row.residual_k = *t - p.t_cal_k;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rdts
