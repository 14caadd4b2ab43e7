#include "rdts/heat.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "rdts/errors.hpp"

namespace rdts {

namespace {
constexpr double kHullMarginK = 10.0;
}

double copper_resistivity(double temperature_k, const CopperProperties& cu) {
    const auto& tab = cu.rho_table_ohm_m;
    if (tab.size() < 2)
        throw std::domain_error("resistivity table needs at least two points");
    const double lo = tab.front().first;
    const double hi = tab.back().first;
    if (temperature_k < lo - kHullMarginK || temperature_k > hi + kHullMarginK)
        throw std::domain_error("temperature outside resistivity table hull");

    std::size_t i = 1;
    while (i + 1 < tab.size() && temperature_k > tab[i].first) ++i;
    const auto& [t0, r0] = tab[i - 1];
    const auto& [t1, r1] = tab[i];
    return r0 + (r1 - r0) * (temperature_k - t0) / (t1 - t0);
}

double electrical_resistance(double temperature_k, const HeaterGeometry& g,
                             const CopperProperties& cu) {
    const double rho = copper_resistivity(temperature_k, cu);
    const double expansion = 1.0 + cu.alpha_per_k * (temperature_k - cu.t0_k);
    return rho * g.trace_length_m * expansion /
           (g.trace_thickness_m * g.trace_width_m);
}

double dissipated_power(double current_a, double temperature_k,
                        const HeaterGeometry& g, const CopperProperties& cu) {
    if (current_a < 0.0) throw std::domain_error("current must be non-negative");
    return electrical_resistance(temperature_k, g, cu) * current_a * current_a;
}

double temperature_rise(double current_a, const ThermalEnvironment& env,
                        const HeaterGeometry& g, const CopperProperties& cu,
                        double ambient_k, RiseMode mode) {
    if (current_a < 0.0) throw std::domain_error("current must be non-negative");
    if (!(env.r_th_k_per_w > 0.0))
        throw std::domain_error("thermal resistance must be positive");

    if (mode == RiseMode::Frozen)
        return env.r_th_k_per_w * dissipated_power(current_a, ambient_k, g, cu);

    double dt = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        const double next =
            env.r_th_k_per_w * dissipated_power(current_a, ambient_k + dt, g, cu);
        if (std::abs(next - dt) < 1e-9) return next;
        dt = next;
    }
    throw DegenerateError("temperature rise iteration did not converge");
}

QuadraticFit fit_quadratic_coefficient(
    const std::vector<std::pair<double, double>>& points) {
    std::set<double> informative;
    for (const auto& [i, dt] : points)
        if (i != 0.0) informative.insert(std::abs(i));
    if (informative.size() < 2)
        throw DegenerateError("quadratic fit needs two points with distinct nonzero currents");

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [i, dt] : points) {
        const double x = i * i;
        sxx += x * x;
        sxy += x * dt;
    }
    QuadraticFit fit;
    fit.k_k_per_a2 = sxy / sxx;

    double rss = 0.0;
    for (const auto& [i, dt] : points) {
        const double r = dt - fit.k_k_per_a2 * i * i;
        rss += r * r;
    }
    const auto n = static_cast<double>(points.size());
    fit.sigma_k = n > 1 ? std::sqrt(rss / (n - 1.0) / sxx) : 0.0;
    return fit;
}

double thermal_resistance_ratio(double h_hot_w_per_m2k, double h_cold_w_per_m2k) {
    if (!(h_hot_w_per_m2k > 0.0) || !(h_cold_w_per_m2k > 0.0))
        throw std::domain_error("convective coefficients must be positive");
    return h_hot_w_per_m2k / h_cold_w_per_m2k;
}

}  // namespace rdts
