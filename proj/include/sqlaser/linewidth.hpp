#pragma once

// Beta-separation-line laser linewidth estimation from frequency-noise PSD
// traces, including calibration of raw spectrum-analyzer dBm readings via
// the PDH error-signal slope.

#include <cmath>
#include <istream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sqlaser/errors.hpp"

namespace sqlaser {

enum class PsdKind { dbm_raw, freq_noise };

struct PsdSample {
    double f_hz = 0.0;
    double value = 0.0; // dBm or Hz^2/Hz depending on kind
};

struct PsdTrace {
    std::vector<PsdSample> samples; // frequencies strictly increasing
    PsdKind value_kind = PsdKind::freq_noise;
    std::optional<double> rbw_hz;      // required for dbm_raw
    std::optional<double> slope_k0;    // V/Hz, required for dbm_raw
    double z0_ohm = 50.0;
    double f_min = 0.0; // 1/T0 lower integration bound
};

struct LinewidthResult {
    double gamma_hz = 0.0;
    double surface_d = 0.0; // Hz^2
    std::vector<double> crossover_freqs;
    double f_lower = 0.0;     // effective lower integration bound
    double truncated_at = 0.0; // last sample frequency (integral upper bound)
};

/// Calibrates a raw dBm trace into a frequency-noise PSD, Hz^2/Hz.
/// Already-calibrated traces pass through unchanged.
inline PsdTrace convert_psd(const PsdTrace& trace) {
    if (trace.value_kind == PsdKind::freq_noise) return trace;
    if (!trace.rbw_hz || !trace.slope_k0)
        throw config_error("convert_psd: dbm_raw trace requires rbw and k0 calibration");
    PsdTrace out = trace;
    out.value_kind = PsdKind::freq_noise;
    const double cal = (*trace.slope_k0) * (*trace.slope_k0) / trace.z0_ohm;
    for (PsdSample& s : out.samples)
        s.value = (std::pow(10.0, s.value / 10.0) / 1000.0) / cal / *trace.rbw_hz;
    return out;
}

/// The beta separation line 8*ln(2)*f/pi^2, Hz^2/Hz.
inline double beta_line(double f_hz) {
    if (!(f_hz > 0.0)) throw std::domain_error("beta_line: f must be > 0");
    return 8.0 * std::numbers::ln2 * f_hz / (std::numbers::pi * std::numbers::pi);
}

struct SurfaceResult {
    double surface_d = 0.0;
    std::vector<double> crossover_freqs;
    double f_lower = 0.0;
    double f_upper = 0.0;
};

/// Integrates the PSD over the high-modulation-index region (where it exceeds
/// the beta line) by trapezoids, splitting intervals at interpolated crossings.
inline SurfaceResult high_index_surface(const PsdTrace& trace) {
    if (trace.value_kind != PsdKind::freq_noise)
        throw config_error("high_index_surface: trace must be calibrated (freq_noise)");
    if (trace.samples.size() < 2)
        throw parse_error("high_index_surface: need at least 2 samples");

    SurfaceResult res;
    res.f_lower = std::max(trace.f_min, trace.samples.front().f_hz);
    res.f_upper = trace.samples.back().f_hz;

    auto excess = [](double f, double s) { return s - beta_line(f); };

    for (std::size_t i = 0; i + 1 < trace.samples.size(); ++i) {
        double fa = trace.samples[i].f_hz, sa = trace.samples[i].value;
        double fb = trace.samples[i + 1].f_hz, sb = trace.samples[i + 1].value;
        if (fb <= res.f_lower) continue;
        if (fa < res.f_lower) { // clip the first partial interval
            sa += (sb - sa) * (res.f_lower - fa) / (fb - fa);
            fa = res.f_lower;
        }
        const double ea = excess(fa, sa), eb = excess(fb, sb);
        if (ea >= 0.0 && eb >= 0.0) {
            res.surface_d += 0.5 * (sa + sb) * (fb - fa);
        } else if (ea < 0.0 && eb < 0.0) {
            continue;
        } else {
            // one crossing inside; both S and the line are linear on [fa, fb]
            const double t = ea / (ea - eb);
            const double fc = fa + t * (fb - fa);
            const double sc = sa + t * (sb - sa);
            res.crossover_freqs.push_back(fc);
            if (ea >= 0.0)
                res.surface_d += 0.5 * (sa + sc) * (fc - fa);
            else
                res.surface_d += 0.5 * (sc + sb) * (fb - fc);
        }
    }
    return res;
}

/// Gamma = sqrt(8*ln(2)*D).
inline double linewidth_from_surface(double surface_d) {
    if (surface_d < 0.0) throw std::domain_error("linewidth: D must be >= 0");
    return std::sqrt(8.0 * std::numbers::ln2 * surface_d);
}

/// Full pipeline: calibrate if needed, integrate, convert to linewidth.
inline LinewidthResult estimate_linewidth(const PsdTrace& trace) {
    const PsdTrace cal = convert_psd(trace);
    const SurfaceResult s = high_index_surface(cal);
    LinewidthResult r;
    r.surface_d = s.surface_d;
    r.gamma_hz = linewidth_from_surface(s.surface_d);
    r.crossover_freqs = s.crossover_freqs;
    r.f_lower = s.f_lower;
    r.truncated_at = s.f_upper;
    return r;
}

/// Parses the CSV trace format: '#' metadata lines with key=value pairs
/// (kind, rbw, k0, z0, fmin), then `frequency_hz,value` data rows with
/// strictly increasing frequencies.
PsdTrace ingest_trace(std::istream& in);

} // namespace sqlaser
