#pragma once

#include <utility>
#include <vector>

namespace rdts {

/// Serpentine copper trace of one heating element, plus its placement on the
/// board. Defaults are the nominal production values.
struct HeaterGeometry {
    double trace_length_m = 0.432;      ///< L0 at the reference temperature
    double trace_width_m = 0.16e-3;     ///< w
    double trace_thickness_m = 35e-6;   ///< h
    double center_x_m = 0.0;            ///< footprint center on the board
    double center_y_m = 0.0;
    double footprint_m = 0.01;          ///< square side of the heating area
};

/// Copper resistivity versus temperature plus the linear expansion
/// coefficient. The table is interpolated linearly; queries more than
/// 10 K outside the tabulated hull are rejected.
struct CopperProperties {
    std::vector<std::pair<double, double>> rho_table_ohm_m = {
        {77.0, 1.5e-9}, {296.0, 1.68e-8}, {400.0, 2.40e-8}};
    double alpha_per_k = 17e-6;
    double t0_k = 296.0;
};

enum class ThermalLabel { Air296K, LN2_77K, Custom };

struct ThermalEnvironment {
    double r_th_k_per_w = 0.0;
    double h_conv_w_per_m2k = 0.0;  ///< optional alternative parameterization
    ThermalLabel label = ThermalLabel::Custom;
};

enum class RiseMode { Frozen, SelfConsistent };

/// rho(T) from the copper table, linear interpolation. Up to 10 K beyond the
/// table hull the edge segment is extended; farther out throws.
double copper_resistivity(double temperature_k, const CopperProperties& cu);

/// R_el(T) = rho(T) * L0 * (1 + alpha (T - T0)) / (h w)
double electrical_resistance(double temperature_k, const HeaterGeometry& g,
                             const CopperProperties& cu);

/// P = R_el(T) * I^2
double dissipated_power(double current_a, double temperature_k,
                        const HeaterGeometry& g, const CopperProperties& cu);

/// Temperature rise of the element: dT = R_th * R_el * I^2.
/// Frozen mode evaluates R_el at the ambient temperature. SelfConsistent
/// solves dT = R_th * R_el(T_ambient + dT) * I^2 by fixed point iteration
/// to 1e-9 K (DegenerateError after 1000 iterations).
double temperature_rise(double current_a, const ThermalEnvironment& env,
                        const HeaterGeometry& g, const CopperProperties& cu,
                        double ambient_k, RiseMode mode);

struct QuadraticFit {
    double k_k_per_a2 = 0.0;
    double sigma_k = 0.0;
};

/// Least squares fit of dT = K * I^2 with no intercept. Requires at least
/// two points with distinct nonzero currents (DegenerateError otherwise).
QuadraticFit fit_quadratic_coefficient(
    const std::vector<std::pair<double, double>>& current_dt_points);

/// Ratio of thermal resistances inferred from convective coefficients:
/// (1/h_cold) / (1/h_hot) = h_hot / h_cold.
double thermal_resistance_ratio(double h_hot_w_per_m2k, double h_cold_w_per_m2k);

}  // namespace rdts
