#pragma once

#include <cstdint>
#include <vector>

#include "rdts/board.hpp"
#include "rdts/calibration.hpp"
#include "rdts/instrument.hpp"
#include "rdts/raman.hpp"

namespace rdts {

/// Per-bin temperature estimates along the fiber. Reporting bins aggregate an
/// integer number of time bins, so bin_length_m is the effective (quantized)
/// resolution and origin_m is aligned to a time-bin edge.
struct TemperatureProfile {
    double bin_length_m = 0.0;
    double origin_m = 0.0;
    std::vector<double> temperatures_k;
    std::vector<double> sigmas_k;
    std::vector<std::uint8_t> valid;

    std::size_t size() const { return temperatures_k.size(); }
    double bin_center_m(std::size_t i) const {
        return origin_m + (static_cast<double>(i) + 0.5) * bin_length_m;
    }
};

struct ProfileOptions {
    double bin_length_m = 0.01;  ///< requested reporting resolution
    double origin_m = 0.0;       ///< arc length of reporting bin zero
};

/// Inverts a trace pair into a temperature profile. Raw counts are summed
/// into reporting bins before the ratio is formed; bins whose inversion
/// fails are flagged invalid, never interpolated.
TemperatureProfile invert_profile(const CountHistogram& as_t,
                                  const CountHistogram& as_ref,
                                  const CountHistogram& s_t,
                                  const CalibrationConstants& cal,
                                  double noise_s_counts_per_bin,
                                  double group_index,
                                  const ProfileOptions& options = {});

struct SamplePoint {
    double arc_m = 0.0;  ///< global arc length along the fiber
    double x_m = 0.0;
    double y_m = 0.0;
    std::ptrdiff_t bin_index = 0;
    std::uint32_t color_tag = 0;
};

/// Points every `spacing_m` of arc along the board part of the layout, each
/// carrying board coordinates and its reporting-bin index.
std::vector<SamplePoint> sample_path(const FiberLayout& layout, double spacing_m,
                                     double bin_length_m, double origin_m);

/// Raster of temperatures over the board plane. values is row-major with
/// index iy * width + ix; pixel (ix, iy) is centred at
/// ((ix + 0.5) res, (iy + 0.5) res) in board coordinates.
struct ThermogramGrid {
    double resolution_m = 0.001;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> values;

    double& at(std::size_t ix, std::size_t iy) { return values[iy * width + ix]; }
    double at(std::size_t ix, std::size_t iy) const { return values[iy * width + ix]; }
    double pixel_x_m(std::size_t ix) const {
        return (static_cast<double>(ix) + 0.5) * resolution_m;
    }
    double pixel_y_m(std::size_t iy) const {
        return (static_cast<double>(iy) + 0.5) * resolution_m;
    }
};

/// One Gaussian hot spot per valid sample point, amplitude T - ambient and
/// unit peak. Overlapping spots combine per pixel by taking the largest
/// contribution; untouched pixels stay at ambient.
ThermogramGrid splat_gaussians(const std::vector<SamplePoint>& points,
                               const TemperatureProfile& profile,
                               const BoardModel& board, double fwhm_m,
                               double resolution_m = 0.001);

/// Separable normalized Gaussian smoothing with replicate edges.
ThermogramGrid gaussian_filter(const ThermogramGrid& grid, double fwhm_m);

}  // namespace rdts
