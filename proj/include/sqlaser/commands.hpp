#pragma once

// Library-level implementations of the CLI subcommands.  Each cmd_* returns
// a ResultTable (or a JSON document) so the binary and the tests drive the
// exact same code path.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sqlaser/descriptor.hpp"
#include "sqlaser/fitting.hpp"
#include "sqlaser/linewidth.hpp"
#include "sqlaser/result_table.hpp"

namespace sqlaser {

/// Noise spectrum over an omega grid.  An empty grid uses the descriptor's
/// omega sweep when present, otherwise the default 200-point log grid
/// spanning [1e-3, 10] kappa.  Singular grid points are flagged, not dropped.
ResultTable cmd_spectrum(const ExperimentDescriptor& d,
                         std::vector<double> omega_grid = {},
                         std::optional<EvalMode> mode_override = {});

/// Sweep over the descriptor's axis: pump_ratio -> output power (linear
/// model), r -> output power (cosh scale) or noise dB (spectrum at
/// omega_eval), omega -> noise spectrum.
ResultTable cmd_sweep(const ExperimentDescriptor& d,
                      std::optional<EvalMode> mode_override = {});

/// Single-row threshold summary: E, P_th, reduced P'_th at the reservoir r,
/// classical gain at the requested pump power and the delta against a
/// measured reduced threshold when one is given.
ResultTable cmd_threshold(const ExperimentDescriptor& d);

/// Two-cavity comb detunings and co-resonance flags.
ResultTable cmd_comb(const ExperimentDescriptor& d,
                     std::optional<double> tol_override = {});

/// Linewidth estimate from a PSD trace stream.
LinewidthResult cmd_linewidth(std::istream& trace,
                              std::optional<double> fmin_override = {});
std::string linewidth_to_json(const LinewidthResult& r);

/// Parses `x,y[,sigma]` CSV rows ('#' lines are comments).
std::vector<DataPoint> ingest_datapoints(std::istream& in);

/// Fit dispatch; model is one of "linear", "cosh", "alpha".  The alpha model
/// needs a descriptor carrying a spectrum config with damping and omega_eval.
FitResult cmd_fit(const std::vector<DataPoint>& data, const std::string& model,
                  const ExperimentDescriptor* d = nullptr,
                  double alpha_lo = 0.0, double alpha_hi = 5.0);
std::string fit_to_json(const FitResult& r, const std::string& model);

} // namespace sqlaser
