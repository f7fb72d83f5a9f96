#pragma once

// Frequency-domain linear-response solver for the reservoir-engineered OPO.
//
// Two evaluation modes are provided:
//  - canonical: Langevin drift matrix with kappa/2 half-widths, full
//    denominator (including -|B|^2), and the standard input-output boundary
//    a_out = sqrt(kappa)*a_s - b_in.  This mode satisfies the physical
//    invariants (shot-noise pass-through, passive unitarity, uncertainty).
//  - verbatim: a literal transcription of the published closed forms,
//    including their sqrt(kappa) denominators, splitter-style boundary
//    sqrt(1-kappa)*b_in and signed (not magnitude) squares.  It exists to
//    reproduce fitted curves, not to be self-consistent physics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "sqlaser/model_core.hpp"
#include "sqlaser/squeezed_basis.hpp"

namespace sqlaser {

using cplx = std::complex<double>;

/// Drift coefficients of the squeezed-basis Langevin equation, rad/s.
struct ResponseCoefficients {
    cplx a_coef; // multiplies a_s
    cplx b_coef; // multiplies a_s^+
};

/// 2x2 map from the input pair (b_in, b_in^+) to an output pair at one
/// sideband frequency.  Entries are dimensionless.
struct TransferMatrix {
    cplx t_bb, t_bd, t_db, t_dd;
};

enum class EvalMode { canonical, verbatim };

/// Effective two-photon-damping loss channel, eta = 1 - alpha*|r - r_p|.
struct DampingModel {
    double alpha = 0.0;
    double r_p = 0.0;
};

struct SpectrumConfig {
    BareOpoParams params;
    SqueezedState reservoir;
    EvalMode mode = EvalMode::canonical;
    std::optional<DampingModel> damping;
};

inline ResponseCoefficients response_coefficients(const BareOpoParams& p,
                                                  const SqueezedState& s) {
    p.validate();
    using namespace std::complex_literals;
    const double ch2 = std::cosh(2.0 * s.r), sh2 = std::sinh(2.0 * s.r);
    ResponseCoefficients c;
    c.a_coef = -1.0i * (p.delta_c * ch2 + p.g * sh2);
    c.b_coef = 1.0i * (p.delta_c * sh2 + p.g * ch2) * std::polar(1.0, -s.theta);
    return c;
}

/// Solves the intracavity 2x2 system at sideband frequency omega and returns
/// the map (b_in, b_in^+) -> (a_s, a_s^+).  The dagger row is the conjugate
/// equation, so t_dd(omega) = conj(t_bb(-omega)) and likewise for t_db.
inline TransferMatrix intracavity_transfer(const ResponseCoefficients& c,
                                           double kappa, double omega) {
    using namespace std::complex_literals;
    const cplx iw = 1.0i * omega;
    const cplx d1 = -iw - c.a_coef + 0.5 * kappa;
    const cplx d2 = -iw - std::conj(c.a_coef) + 0.5 * kappa;
    const cplx den = d1 * d2 - std::norm(c.b_coef);
    if (std::abs(den) < 1e-12 * kappa * kappa)
        throw threshold_singularity(
            "at-threshold singularity: linearized spectrum undefined");
    const double sk = std::sqrt(kappa);
    TransferMatrix t;
    t.t_bb = sk * d2 / den;
    t.t_bd = sk * c.b_coef / den;
    t.t_db = sk * std::conj(c.b_coef) / den;
    t.t_dd = sk * d1 / den;
    return t;
}

/// Output map at omega per the selected evaluation mode.
inline TransferMatrix output_transfer(const SpectrumConfig& cfg, double omega) {
    const ResponseCoefficients c = response_coefficients(cfg.params, cfg.reservoir);
    const double kappa = cfg.params.kappa;
    if (cfg.mode == EvalMode::canonical) {
        const TransferMatrix s = intracavity_transfer(c, kappa, omega);
        const double sk = std::sqrt(kappa);
        return {sk * s.t_bb - 1.0, sk * s.t_bd, sk * s.t_db, sk * s.t_dd - 1.0};
    }
    // verbatim: printed output relations, kappa/2 widths but splitter boundary
    using namespace std::complex_literals;
    const cplx iw = 1.0i * omega;
    const cplx f1 = iw - c.a_coef + 0.5 * kappa;
    const cplx f2 = -iw - std::conj(c.a_coef) + 0.5 * kappa;
    const cplx den = f1 * f2 - std::norm(c.b_coef);
    if (std::abs(den) < 1e-12 * kappa * kappa)
        throw threshold_singularity(
            "at-threshold singularity: linearized spectrum undefined");
    const double root1mk = std::sqrt(1.0 - kappa);
    TransferMatrix t;
    t.t_bb = kappa * f2 / den + root1mk;
    t.t_bd = kappa * c.b_coef / den;
    t.t_db = kappa * std::conj(c.b_coef) / den;
    t.t_dd = kappa * f1 / den + root1mk;
    return t;
}

namespace detail {

/// Input covariance of the squeezed reservoir, rotated by theta/2.
struct InputCov {
    double xx, pp, xp;
};

inline InputCov input_covariance(const SqueezedState& s) {
    const double c = std::cos(0.5 * s.theta), sn = std::sin(0.5 * s.theta);
    const double e2 = std::exp(2.0 * s.r), em = std::exp(-2.0 * s.r);
    return {c * c * e2 + sn * sn * em, sn * sn * e2 + c * c * em, c * sn * (e2 - em)};
}

inline double quad_form(cplx a, cplx b, const InputCov& v) {
    return std::norm(a) * v.xx + std::norm(b) * v.pp +
           2.0 * std::real(a * std::conj(b)) * v.xp;
}

/// Literal transcription of the printed variance expression (signed squares,
/// sqrt(kappa) in the denominators, no -|B|^2 term).  The p-quadrature uses
/// the mirrored expression with the input-variance roles exchanged.
inline QuadVariance verbatim_variance(const SpectrumConfig& cfg, double omega) {
    const ResponseCoefficients c = response_coefficients(cfg.params, cfg.reservoir);
    using namespace std::complex_literals;
    const double kappa = cfg.params.kappa;
    const cplx iw = 1.0i * omega;
    const double sk = std::sqrt(kappa);
    const cplx den = (iw - c.a_coef + sk) * (-iw - std::conj(c.a_coef) + sk);
    if (std::abs(den) < 1e-12 * kappa * kappa)
        throw threshold_singularity(
            "at-threshold singularity: linearized spectrum undefined");
    const cplx c1 = kappa * kappa / (2.0 * den) + std::sqrt(1.0 - kappa);
    const cplx c2 = kappa / den * (-iw + c.a_coef - c.b_coef);
    const double e2 = std::exp(2.0 * cfg.reservoir.r);
    const double em = std::exp(-2.0 * cfg.reservoir.r);
    QuadVariance v;
    v.var_x = std::real(c1 * c1 * e2 - c2 * c2 * em);
    v.var_p = std::real(c1 * c1 * em - c2 * c2 * e2);
    return v;
}

} // namespace detail

/// Output quadrature noise variances at sideband frequency omega.
inline QuadVariance quadrature_variance(const SpectrumConfig& cfg, double omega) {
    if (cfg.mode == EvalMode::verbatim) return detail::verbatim_variance(cfg, omega);
    const TransferMatrix t = output_transfer(cfg, omega);
    using namespace std::complex_literals;
    // x_out = cx*x_in + cp*p_in, p_out = dx*x_in + dp*p_in
    const cplx cx = 0.5 * (t.t_bb + t.t_db + t.t_bd + t.t_dd);
    const cplx cp = 0.5i * (t.t_bb + t.t_db - t.t_bd - t.t_dd);
    const cplx dx = (t.t_bb - t.t_db + t.t_bd - t.t_dd) / (2.0i);
    const cplx dp = 0.5 * (t.t_bb - t.t_db - t.t_bd + t.t_dd);
    const detail::InputCov v = detail::input_covariance(cfg.reservoir);
    return {detail::quad_form(cx, cp, v), detail::quad_form(dx, dp, v)};
}

struct DampedVariance {
    double value = 0.0;
    bool clamped = false; // eta fell outside [0, 1] and was clamped
};

/// Applies the two-photon-damping correction eta = 1 - alpha*|r - r_p|.
inline DampedVariance damping_corrected_variance(double v, double alpha, double r,
                                                 double r_p) {
    if (alpha < 0.0) throw std::domain_error("damping correction: alpha must be >= 0");
    double eta = 1.0 - alpha * std::abs(r - r_p);
    DampedVariance out;
    if (eta < 0.0 || eta > 1.0) {
        eta = std::clamp(eta, 0.0, 1.0);
        out.clamped = true;
    }
    out.value = apply_loss(v, eta);
    return out;
}

/// Subthreshold OPO noise variances from pump ratio, analysis frequency and
/// the loss budget.  var_p carries the squeezed V-, var_x the anti-squeezed V+.
inline QuadVariance subthreshold_variance(double pump_ratio, double f_hz,
                                          double gamma_hz, double eta_tot,
                                          double theta_tot) {
    if (pump_ratio < 0.0) throw std::domain_error("pump_ratio must be >= 0");
    if (!(gamma_hz > 0.0)) throw std::domain_error("gamma must be > 0");
    const double sp = std::sqrt(pump_ratio);
    const double fr = f_hz / gamma_hz;
    const double dminus = (1.0 - sp) * (1.0 - sp) + 4.0 * fr * fr;
    if (dminus <= 0.0)
        throw threshold_singularity("subthreshold variance singular at threshold");
    const double dplus = (1.0 + sp) * (1.0 + sp) + 4.0 * fr * fr;
    const double lo = 1.0 - 4.0 * eta_tot * sp / dplus;
    const double hi = 1.0 + 4.0 * eta_tot * sp / dminus;
    const double c2 = std::cos(theta_tot) * std::cos(theta_tot);
    const double s2 = std::sin(theta_tot) * std::sin(theta_tot);
    return {hi * c2 + lo * s2, lo * c2 + hi * s2};
}

/// Mean output photon number for squeezed-vacuum input with parameter r.
inline double mean_photon_number(const SpectrumConfig& cfg, double omega) {
    const TransferMatrix t = output_transfer(cfg, omega);
    const double r = cfg.reservoir.r;
    const double n = std::sinh(r) * std::sinh(r);
    const cplx m = -std::polar(1.0, -cfg.reservoir.theta) * std::cosh(r) * std::sinh(r);
    return std::norm(t.t_bb) * n + std::norm(t.t_bd) * (n + 1.0) +
           2.0 * std::real(std::conj(t.t_bb) * t.t_bd * std::conj(m));
}

} // namespace sqlaser
