#pragma once

// Experiment descriptor: the JSON document that aggregates the system,
// reservoir, loss-budget, geometry and sweep settings consumed by the CLI.

#include <optional>
#include <string>

#include "sqlaser/comb.hpp"
#include "sqlaser/model_core.hpp"
#include "sqlaser/spectrum.hpp"
#include "sqlaser/threshold.hpp"

namespace sqlaser {

struct SubthresholdParams {
    double pump_ratio = 0.0;
    double f_hz = 0.0;
    double gamma_hz = 0.0;
};

struct SweepSpec {
    std::string variable; // pump_ratio | r | omega
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    bool log_spacing = false;
};

struct PowerModel {
    double slope_w = 0.0;
    double intercept_w = 0.0;
};

struct TwoCavityGeometry {
    CavityGeometry cavity1;
    CavityGeometry cavity2;
    double acceptance_bandwidth_hz = 0.0;
};

struct ExperimentDescriptor {
    std::string name;
    std::optional<SpectrumConfig> spectrum;
    double propagation_efficiency = 1.0;
    std::optional<LossBudget> budget;
    std::optional<SubthresholdParams> subthreshold;
    std::optional<TwoCavityGeometry> geometry;
    std::optional<DoublyResonantParams> doubly_resonant;
    std::optional<double> pump_power_w;
    std::optional<double> measured_reduced_threshold_w;
    std::optional<PowerModel> power_model;
    std::optional<double> cosh_scale_w;
    std::optional<double> omega_eval;
    std::optional<SweepSpec> sweep;

    /// Content hash over the canonical JSON serialization (FNV-1a 64).
    std::string content_hash;
};

/// Parses a descriptor document; throws config_error on schema violations.
ExperimentDescriptor load_descriptor(const std::string& json_text);
ExperimentDescriptor load_descriptor_file(const std::string& path);

} // namespace sqlaser
