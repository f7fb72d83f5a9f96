#pragma once

// Two-cavity frequency-comb analysis: FSRs from geometry, Airy transmission,
// per-sideband detunings and co-resonance detection.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "sqlaser/threshold.hpp" // light_speed

namespace sqlaser {

struct CavityGeometry {
    double air_path = 0.0;      // m, geometric path excluding the crystal
    double crystal_len = 0.0;   // m
    double crystal_index = 1.0; // refractive index at the signal wavelength
    double r1 = 0.0;            // mirror amplitude reflectivities
    double r2 = 0.0;

    double optical_path() const { return air_path + crystal_index * crystal_len; }

    void validate() const {
        if (!(optical_path() > 0.0)) throw std::domain_error("optical path must be > 0");
        for (double r : {r1, r2})
            if (r < 0.0 || r >= 1.0) throw std::domain_error("reflectivities must lie in [0, 1)");
    }
};

struct CombEntry {
    std::int64_t mode_index = 0;
    double offset_hz = 0.0;   // cavity-2 mode frequency relative to the carrier
    double detuning_hz = 0.0; // distance to nearest cavity-1 mode, folded
    bool co_resonant = false;
};

struct CombReport {
    std::vector<CombEntry> entries; // ordered by mode_index
    double tol_hz = 0.0;
};

inline double fsr(const CavityGeometry& g) {
    g.validate();
    return light_speed / (2.0 * g.optical_path());
}

/// Airy transmission of a two-mirror cavity at sideband frequency nu.
inline double transmission(double nu, double fsr_hz, double r1, double r2) {
    if (!(fsr_hz > 0.0)) throw std::domain_error("transmission: fsr must be > 0");
    const double phase = std::numbers::pi * nu / fsr_hz;
    const std::complex<double> num =
        std::sqrt((1.0 - r1 * r1) * (1.0 - r2 * r2)) * std::polar(1.0, phase);
    const std::complex<double> den = 1.0 - r1 * r2 * std::polar(1.0, 2.0 * phase);
    return std::norm(num / den);
}

/// Full width at half maximum of the Airy resonance, Hz.
inline double transmission_fwhm(double fsr_hz, double r1, double r2) {
    const double rr = r1 * r2;
    if (!(rr > 0.0)) return fsr_hz;
    return 2.0 * fsr_hz / std::numbers::pi * std::asin((1.0 - rr) / (2.0 * std::sqrt(rr)));
}

/// Folds a detuning into (-fsr/2, fsr/2].
inline double fold_detuning(double offset_hz, double fsr_hz) {
    double d = std::remainder(offset_hz, fsr_hz);
    if (d <= -0.5 * fsr_hz) d += fsr_hz; // remainder may return the lower endpoint
    return d;
}

/// Per-sideband detuning of every cavity-2 comb mode within the acceptance
/// bandwidth against the nearest cavity-1 mode.  Mode 0 is the shared carrier.
inline CombReport comb_detunings(double fsr1, double fsr2, double bandwidth,
                                 double tol = 0.0) {
    if (!(fsr1 > 0.0) || !(fsr2 > 0.0) || !(bandwidth > 0.0))
        throw std::domain_error("comb_detunings: fsr1, fsr2, bandwidth must be > 0");
    const auto kmax = static_cast<std::int64_t>(std::floor(0.5 * bandwidth / fsr2));
    CombReport report;
    report.tol_hz = tol;
    report.entries.resize(static_cast<std::size_t>(2 * kmax + 1));
#pragma omp parallel for
    for (std::int64_t k = -kmax; k <= kmax; ++k) {
        CombEntry e;
        e.mode_index = k;
        e.offset_hz = static_cast<double>(k) * fsr2;
        e.detuning_hz = (k == 0) ? 0.0 : fold_detuning(e.offset_hz, fsr1);
        e.co_resonant = (k == 0) || std::abs(e.detuning_hz) <= tol;
        report.entries[static_cast<std::size_t>(k + kmax)] = e;
    }
    return report;
}

/// Mode indices of cavity-2 comb lines co-resonant with cavity 1 within tol.
inline std::vector<std::int64_t> co_resonances(double fsr1, double fsr2,
                                               double bandwidth, double tol) {
    if (tol < 0.0) throw std::domain_error("co_resonances: tol must be >= 0");
    std::vector<std::int64_t> out;
    for (const CombEntry& e : comb_detunings(fsr1, fsr2, bandwidth, tol).entries)
        if (e.co_resonant) out.push_back(e.mode_index);
    return out;
}

/// Default co-resonance tolerance: half the narrower cavity linewidth.
inline double default_coresonance_tol(const CavityGeometry& g1, const CavityGeometry& g2) {
    const double w1 = transmission_fwhm(fsr(g1), g1.r1, g1.r2);
    const double w2 = transmission_fwhm(fsr(g2), g2.r1, g2.r2);
    return 0.5 * std::min(w1, w2);
}

} // namespace sqlaser
