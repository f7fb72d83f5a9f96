#pragma once

// Grid evaluation kernels for spectrum sweeps.  The OpenMP kernel is the
// production path; the serial kernel is the reference implementation kept
// for testing and benchmarking.  Both produce identical results in grid
// order; at-threshold grid points are flagged instead of dropped.

#include <vector>

#include "sqlaser/spectrum.hpp"

namespace sqlaser {

struct SweepPoint {
    double omega = 0.0;
    QuadVariance vars;
    bool singular = false;
};

/// Logarithmic or linear grid with count >= 2 points from lo to hi inclusive.
std::vector<double> make_grid(double lo, double hi, std::size_t count, bool log_spacing);

std::vector<SweepPoint> sweep_spectrum_serial(const SpectrumConfig& cfg,
                                              const std::vector<double>& omega_grid);

std::vector<SweepPoint> sweep_spectrum(const SpectrumConfig& cfg,
                                       const std::vector<double>& omega_grid);

} // namespace sqlaser
