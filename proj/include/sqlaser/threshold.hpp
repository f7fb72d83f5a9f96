#pragma once

// Threshold power and classical parametric gain of a doubly resonant OPO,
// squeezing-reduced threshold and the empirical output-power models.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "sqlaser/errors.hpp"

namespace sqlaser {

inline constexpr double vacuum_permeability = 4.0e-7 * std::numbers::pi; // H/m
inline constexpr double light_speed = 2.99792458e8;                      // m/s

struct DoublyResonantParams {
    double t_p = 0.0;         // pump transmittance
    double v_p = 0.0;         // pump round-trip loss
    double t_s = 0.0;         // signal transmittance
    double l_s = 0.0;         // signal round-trip loss
    double d_eff = 0.0;       // effective nonlinearity, m/V
    double omega_s = 0.0;     // rad/s
    double omega_i = 0.0;     // rad/s
    double omega_p = 0.0;     // rad/s
    double n_p = 1.0;         // pump refractive index
    double crystal_len = 0.0; // m
    double h_focus = 1.0;     // Gaussian focusing factor

    void validate() const {
        for (double t : {t_p, v_p, t_s, l_s})
            if (t < 0.0 || t >= 1.0)
                throw std::domain_error("transmittances/losses must lie in [0, 1)");
        if (std::abs(omega_p - (omega_s + omega_i)) > 1e-6 * omega_p)
            throw std::domain_error("energy conservation violated: omega_p != omega_s + omega_i");
    }
};

/// Nonlinear coefficient E of the parametric interaction, W^-1.
inline double nonlinear_coefficient(const DoublyResonantParams& p) {
    p.validate();
    return 4.0 * vacuum_permeability * p.d_eff * p.d_eff * p.omega_s * p.omega_s *
           p.omega_i * p.omega_i * p.crystal_len * p.h_focus /
           (std::numbers::pi * light_speed * light_speed * p.n_p * p.n_p * p.omega_p);
}

/// Threshold pump power (T_p + V_p)^2 (T_s + l)^2 / (2 T_p E), W.
inline double threshold_power(const DoublyResonantParams& p) {
    p.validate();
    if (!(p.t_p > 0.0)) throw std::domain_error("threshold_power: t_p must be > 0");
    const double e = nonlinear_coefficient(p);
    if (!(e > 0.0)) throw std::domain_error("threshold_power: nonlinear coefficient is zero");
    const double num = (p.t_p + p.v_p) * (p.t_p + p.v_p) * (p.t_s + p.l_s) * (p.t_s + p.l_s);
    return num / (2.0 * p.t_p * e);
}

struct ClassicalGain {
    double gain = 1.0;
    bool above_threshold = false;
};

/// g0 = 1/(1 - sqrt(P/P_th))^2.  Above threshold the printed value is
/// returned with a diagnostic flag so sweeps can cross the threshold.
inline ClassicalGain classical_gain(double pump_power, double p_th) {
    if (pump_power < 0.0 || !(p_th > 0.0))
        throw std::domain_error("classical_gain: pump_power >= 0 and p_th > 0 required");
    if (pump_power == p_th)
        throw threshold_singularity("classical gain diverges at P = P_th");
    const double s = 1.0 - std::sqrt(pump_power / p_th);
    return {1.0 / (s * s), pump_power > p_th};
}

/// Squeezing-reduced threshold P'_th = P_th / cosh(2r).
inline double reduced_threshold(double p_th, double r) {
    if (!(p_th > 0.0) || r < 0.0)
        throw std::domain_error("reduced_threshold: p_th > 0 and r >= 0 required");
    return p_th / std::cosh(2.0 * r);
}

/// (spontaneous, stimulated) gain factors: e^{r_p} vs cosh(2r).
inline std::pair<double, double> gain_comparison(double r_p, double r) {
    if (r_p < 0.0 || r < 0.0) throw std::domain_error("gain_comparison: r_p, r must be >= 0");
    return {std::exp(r_p), std::cosh(2.0 * r)};
}

/// Linear output-power model above the reduced threshold.
inline double power_model_eval(double slope, double intercept, double pump_ratio) {
    if (pump_ratio < 1.0)
        throw std::domain_error("power_model_eval: pump_ratio must be >= 1");
    return slope * pump_ratio + intercept;
}

/// Normalized power curve P(r)/P(r0) = cosh(2r)/cosh(2r0).
inline double power_vs_r(double r, double r0) {
    if (r < 0.0 || r0 < 0.0) throw std::domain_error("power_vs_r: r, r0 must be >= 0");
    return std::cosh(2.0 * r) / std::cosh(2.0 * r0);
}

} // namespace sqlaser
