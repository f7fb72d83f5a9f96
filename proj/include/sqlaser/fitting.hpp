#pragma once

// Least-squares estimation of the model constants the published curves
// leave free: the two-photon-damping coefficient alpha and the linear /
// cosh-scale output-power models.

#include <cmath>
#include <functional>
#include <vector>

#include "sqlaser/spectrum.hpp"

namespace sqlaser {

struct DataPoint {
    double x = 0.0;
    double y = 0.0;
    double sigma = 0.0; // 0 means "no standard error given" (uniform weight)
};

struct FitResult {
    std::vector<double> estimate;
    double residual_sse = 0.0;
    int iterations = 0;
    bool converged = false;
};

namespace detail {
inline double weight(const DataPoint& d) {
    if (d.sigma < 0.0) throw std::domain_error("sigma must be > 0 when present");
    return d.sigma > 0.0 ? 1.0 / (d.sigma * d.sigma) : 1.0;
}
} // namespace detail

/// Ordinary (or sigma-weighted) least squares line fit; estimate = {slope, intercept}.
inline FitResult fit_linear(const std::vector<DataPoint>& data) {
    if (data.size() < 2) throw std::domain_error("fit_linear: need at least 2 points");
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const DataPoint& d : data) {
        const double w = detail::weight(d);
        sw += w;
        sx += w * d.x;
        sy += w * d.y;
        sxx += w * d.x * d.x;
        sxy += w * d.x * d.y;
    }
    const double det = sw * sxx - sx * sx;
    if (det == 0.0 || !std::isfinite(det))
        throw std::domain_error("fit_linear: degenerate design (all x identical)");
    const double slope = (sw * sxy - sx * sy) / det;
    const double intercept = (sxx * sy - sx * sxy) / det;
    FitResult r;
    r.estimate = {slope, intercept};
    for (const DataPoint& d : data) {
        const double e = slope * d.x + intercept - d.y;
        r.residual_sse += detail::weight(d) * e * e;
    }
    r.converged = true;
    r.iterations = 1;
    return r;
}

/// Closed-form scale fit for P = s*cosh(2r); estimate = {s}.
inline FitResult fit_cosh_scale(const std::vector<DataPoint>& data) {
    if (data.empty()) throw std::domain_error("fit_cosh_scale: empty data");
    double num = 0, den = 0;
    for (const DataPoint& d : data) {
        const double w = detail::weight(d);
        const double c = std::cosh(2.0 * d.x);
        num += w * d.y * c;
        den += w * c * c;
    }
    FitResult r;
    r.estimate = {num / den};
    for (const DataPoint& d : data) {
        const double e = r.estimate[0] * std::cosh(2.0 * d.x) - d.y;
        r.residual_sse += detail::weight(d) * e * e;
    }
    r.converged = true;
    r.iterations = 1;
    return r;
}

/// Template for the alpha fit: everything about the spectrum evaluation is
/// fixed except the reservoir squeezing parameter (the data abscissa) and
/// the damping coefficient alpha being estimated.
struct AlphaFitModel {
    SpectrumConfig config; // damping.r_p is the fixed pump-process parameter
    double omega = 0.0;    // evaluation sideband, rad/s

    /// Squeezed-quadrature noise power in dB at reservoir parameter r.
    double model_db(double r, double alpha) const {
        SpectrumConfig c = config;
        c.reservoir = SqueezedState(r, config.reservoir.theta);
        const QuadVariance v = quadrature_variance(c, omega);
        const double squeezed = std::min(v.var_x, v.var_p);
        const double r_p = config.damping ? config.damping->r_p : 0.0;
        return variance_to_db(damping_corrected_variance(squeezed, alpha, r, r_p).value);
    }
};

/// Weighted 1-D least squares for alpha: coarse grid scan (>= 64 cells)
/// followed by golden-section refinement to 1e-6 absolute on alpha.
/// Ties during the scan resolve toward smaller alpha.
inline FitResult fit_alpha(const std::vector<DataPoint>& data, const AlphaFitModel& model,
                           double alpha_lo, double alpha_hi) {
    if (data.size() < 2) throw std::domain_error("fit_alpha: need at least 2 points");
    if (!(alpha_lo >= 0.0) || !(alpha_hi > alpha_lo))
        throw std::domain_error("fit_alpha: invalid bounds");

    auto sse = [&](double alpha) {
        double s = 0.0;
        for (const DataPoint& d : data) {
            const double m = model.model_db(d.x, alpha);
            if (!std::isfinite(m))
                throw std::domain_error("fit_alpha: non-finite model output at alpha = " +
                                        std::to_string(alpha));
            const double e = (m - d.y);
            s += detail::weight(d) * e * e;
        }
        return s;
    };

    constexpr int grid_cells = 64;
    int best_i = 0;
    double best = sse(alpha_lo);
    for (int i = 1; i <= grid_cells; ++i) {
        const double a = alpha_lo + (alpha_hi - alpha_lo) * i / grid_cells;
        const double s = sse(a);
        if (s < best) {
            best = s;
            best_i = i;
        }
    }
    const double cell = (alpha_hi - alpha_lo) / grid_cells;
    double lo = alpha_lo + cell * std::max(0, best_i - 1);
    double hi = alpha_lo + cell * std::min(grid_cells, best_i + 1);

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = sse(c), fd = sse(d);
    int iters = grid_cells + 1;
    while (hi - lo > 1e-6) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = sse(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = sse(d);
        }
        ++iters;
    }
    FitResult r;
    r.estimate = {0.5 * (lo + hi)};
    r.residual_sse = sse(r.estimate[0]);
    r.iterations = iters;
    r.converged = true;
    return r;
}

} // namespace sqlaser
