#include "sqlaser/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace sqlaser {

std::vector<double> make_grid(double lo, double hi, std::size_t count, bool log_spacing) {
    if (count < 2) throw std::domain_error("grid: count must be >= 2");
    if (!(lo < hi)) throw std::domain_error("grid: lo must be < hi");
    if (log_spacing && !(lo > 0.0)) throw std::domain_error("grid: log spacing requires lo > 0");
    std::vector<double> grid(count);
    if (log_spacing) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (std::size_t i = 0; i < count; ++i)
            grid[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1));
    } else {
        for (std::size_t i = 0; i < count; ++i)
            grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return grid;
}

namespace {

SweepPoint eval_point(const SpectrumConfig& cfg, double omega) {
    SweepPoint p;
    p.omega = omega;
    try {
        p.vars = quadrature_variance(cfg, omega);
        if (cfg.damping) {
            p.vars.var_x = damping_corrected_variance(p.vars.var_x, cfg.damping->alpha,
                                                      cfg.reservoir.r, cfg.damping->r_p)
                               .value;
            p.vars.var_p = damping_corrected_variance(p.vars.var_p, cfg.damping->alpha,
                                                      cfg.reservoir.r, cfg.damping->r_p)
                               .value;
        }
    } catch (const threshold_singularity&) {
        p.singular = true;
        p.vars = {std::nan(""), std::nan("")};
    }
    return p;
}

} // namespace

std::vector<SweepPoint> sweep_spectrum_serial(const SpectrumConfig& cfg,
                                              const std::vector<double>& omega_grid) {
    std::vector<SweepPoint> out(omega_grid.size());
    for (std::size_t i = 0; i < omega_grid.size(); ++i)
        out[i] = eval_point(cfg, omega_grid[i]);
    return out;
}

std::vector<SweepPoint> sweep_spectrum(const SpectrumConfig& cfg,
                                       const std::vector<double>& omega_grid) {
    std::vector<SweepPoint> out(omega_grid.size());
    const auto n = static_cast<std::ptrdiff_t>(omega_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            eval_point(cfg, omega_grid[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace sqlaser
