#pragma once

// Variance/decibel/squeezing-parameter conversions, beam-splitter loss,
// and the loss-budget arithmetic shared by the other modules.
//
// Conventions: noise variances are dimensionless with the shot-noise limit
// at 1; decibel values are 10*log10(V), so squeezed variances (< 1) print
// as negative dB.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sqlaser/errors.hpp"

namespace sqlaser {

/// Pair of quadrature noise variances, shot-noise limit = 1.
struct QuadVariance {
    double var_x = 1.0;
    double var_p = 1.0;
};

/// Squeezing parameter r >= 0 and angle theta normalized to [0, 2*pi).
struct SqueezedState {
    double r = 0.0;
    double theta = 0.0;

    SqueezedState() = default;
    SqueezedState(double r_, double theta_) : r(r_), theta(wrap_angle(theta_)) {
        if (r < 0.0) throw std::domain_error("squeezing parameter r must be >= 0");
    }

    /// Maps any angle to its representative in [0, 2*pi).
    static double wrap_angle(double a) {
        const double two_pi = 2.0 * std::numbers::pi;
        double w = std::fmod(a, two_pi);
        if (w < 0.0) w += two_pi;
        return w;
    }
};

/// Loss budget of one OPO (Table-style efficiencies plus phase fluctuation).
struct LossBudget {
    double eta_esc = 1.0;
    double eta_pro = 1.0;
    double eta_vis = 1.0;
    double eta_qe = 1.0;
    double theta_tot = 0.0;   // rad
    double t_coupler = 0.0;   // output-coupler transmissivity
    double l_roundtrip = 0.0; // round-trip loss

    void validate() const {
        for (double e : {eta_esc, eta_pro, eta_vis, eta_qe})
            if (!(e > 0.0 && e <= 1.0)) throw std::domain_error("efficiency must lie in (0, 1]");
        if (theta_tot < 0.0) throw std::domain_error("theta_tot must be >= 0");
    }
};

/// Escape efficiency T/(T+l) of an output coupler with round-trip loss l.
inline double escape_efficiency(double t_coupler, double l_roundtrip) {
    if (!(t_coupler > 0.0) || l_roundtrip < 0.0)
        throw std::domain_error("escape_efficiency: t must be > 0 and l >= 0");
    return t_coupler / (t_coupler + l_roundtrip);
}

/// Noise power in dB relative to shot noise; squeezing comes out negative.
inline double variance_to_db(double v) {
    if (!(v > 0.0)) throw std::domain_error("variance_to_db: variance must be positive");
    return 10.0 * std::log10(v);
}

inline double db_to_variance(double d) {
    if (!std::isfinite(d)) throw std::domain_error("db_to_variance: non-finite input");
    return std::pow(10.0, d / 10.0);
}

/// Squeezing parameter r = -ln(V)/2; negative for anti-squeezed input (V > 1).
inline double variance_to_r(double v) {
    if (!(v > 0.0)) throw std::domain_error("variance_to_r: variance must be positive");
    return -0.5 * std::log(v);
}

/// Beam-splitter loss model: V' = eta*V + 1 - eta.
inline double apply_loss(double v, double eta) {
    if (!(v > 0.0)) throw std::domain_error("apply_loss: variance must be positive");
    if (eta < 0.0 || eta > 1.0) throw std::domain_error("apply_loss: eta outside [0, 1]");
    return eta * v + (1.0 - eta);
}

inline double total_efficiency(const LossBudget& b) {
    b.validate();
    return b.eta_esc * b.eta_pro * b.eta_vis * b.eta_qe;
}

/// Pure squeezed state variances: e^{+2r} along x, e^{-2r} along p at theta = 0.
inline QuadVariance pure_state_variances(const SqueezedState& s) {
    return {std::exp(2.0 * s.r), std::exp(-2.0 * s.r)};
}

} // namespace sqlaser
