#pragma once

// Squeezing-unitary basis change of the OPO Hamiltonian.  With hbar = 1 all
// coefficients are angular frequencies.  The pump-phase sign follows the
// e^{+i theta_p} a^2 form; see the README note on the sign convention.

#include <cmath>
#include <complex>
#include <numbers>

#include "sqlaser/model_core.hpp"

namespace sqlaser {

/// Bare (lab-frame) OPO parameters, all rates in rad/s.
struct BareOpoParams {
    double g = 0.0;       // parametric coupling strength
    double delta_c = 0.0; // cavity detuning
    double theta_p = 0.0; // pump phase
    double kappa = 0.0;   // cavity damping constant

    void validate() const {
        if (g < 0.0) throw std::domain_error("g must be >= 0");
        if (!(kappa > 0.0)) throw std::domain_error("kappa must be > 0");
    }
};

/// Coefficients of H_s = c_a2 a^2 + conj(c_a2) a^+2 + c_number a^+a + c_scalar.
struct TransformedHamiltonian {
    std::complex<double> c_a2;
    std::complex<double> c_a2_dag;
    double c_number = 0.0;
    double c_scalar = 0.0;
};

inline TransformedHamiltonian transform_hamiltonian(const BareOpoParams& p,
                                                    const SqueezedState& s) {
    p.validate();
    using namespace std::complex_literals;
    const double dphi = p.theta_p - s.theta;
    const double ch = std::cosh(s.r), sh = std::sinh(s.r);
    const double ch2 = std::cosh(2.0 * s.r), sh2 = std::sinh(2.0 * s.r);
    const std::complex<double> eip = std::polar(1.0, dphi);
    const std::complex<double> eit = std::polar(1.0, s.theta);

    TransformedHamiltonian h;
    h.c_a2 = eit * (0.5 * p.g * (eip * ch * ch + std::conj(eip) * sh * sh)
                    - p.delta_c * ch * sh);
    h.c_a2_dag = std::conj(h.c_a2);
    h.c_number = p.delta_c * ch2 - p.g * sh2 * std::cos(dphi);
    h.c_scalar = p.delta_c * sh * sh - 0.5 * p.g * sh2 * std::cos(dphi);
    return h;
}

/// g_s = g*cosh(2r): coupling enhancement under a squeezed reservoir.
inline double enhanced_coupling(double g, double r) {
    if (g < 0.0 || r < 0.0) throw std::domain_error("enhanced_coupling: g and r must be >= 0");
    return g * std::cosh(2.0 * r);
}

/// True iff theta_p - theta = pi within tol (angles compared modulo 2*pi).
inline bool interaction_condition(const BareOpoParams& p, const SqueezedState& s,
                                  double tol) {
    if (tol < 0.0) throw std::domain_error("interaction_condition: tol must be >= 0");
    const double d = SqueezedState::wrap_angle(p.theta_p - s.theta);
    return std::abs(d - std::numbers::pi) <= tol;
}

} // namespace sqlaser
