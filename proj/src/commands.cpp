#include "sqlaser/commands.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "sqlaser/sweep.hpp"
#include "sqlaser/threshold.hpp"

namespace sqlaser {

namespace {

std::map<std::string, std::string> provenance_for(const ExperimentDescriptor& d,
                                                  EvalMode mode) {
    return {{"descriptor_hash", d.content_hash},
            {"mode", mode == EvalMode::canonical ? "canonical" : "verbatim"},
            {"toolkit_version", toolkit_version}};
}

SpectrumConfig spectrum_config(const ExperimentDescriptor& d,
                               std::optional<EvalMode> mode_override) {
    if (!d.spectrum)
        throw config_error("descriptor has no 'system' block for a spectrum command");
    SpectrumConfig cfg = *d.spectrum;
    if (mode_override) cfg.mode = *mode_override;
    return cfg;
}

ResultTable spectrum_table(const ExperimentDescriptor& d, const SpectrumConfig& cfg,
                           const std::vector<double>& grid) {
    ResultTable t;
    t.columns = {"omega", "var_x", "var_p", "db_x", "db_p", "singular"};
    t.units = {"rad/s", "", "", "dB", "dB", ""};
    t.provenance = provenance_for(d, cfg.mode);
    for (const SweepPoint& p : sweep_spectrum(cfg, grid)) {
        if (p.singular) {
            const double nan = std::nan("");
            t.add_row({p.omega, nan, nan, nan, nan, 1.0});
        } else {
            t.add_row({p.omega, p.vars.var_x, p.vars.var_p, variance_to_db(p.vars.var_x),
                       variance_to_db(p.vars.var_p), 0.0});
        }
    }
    return t;
}

std::vector<double> default_omega_grid(const ExperimentDescriptor& d,
                                       const SpectrumConfig& cfg) {
    if (d.sweep && d.sweep->variable == "omega")
        return make_grid(d.sweep->lo, d.sweep->hi, d.sweep->count, d.sweep->log_spacing);
    return make_grid(1e-3 * cfg.params.kappa, 10.0 * cfg.params.kappa, 200, true);
}

} // namespace

ResultTable cmd_spectrum(const ExperimentDescriptor& d, std::vector<double> omega_grid,
                         std::optional<EvalMode> mode_override) {
    const SpectrumConfig cfg = spectrum_config(d, mode_override);
    if (omega_grid.empty()) omega_grid = default_omega_grid(d, cfg);
    return spectrum_table(d, cfg, omega_grid);
}

ResultTable cmd_sweep(const ExperimentDescriptor& d,
                      std::optional<EvalMode> mode_override) {
    if (!d.sweep) throw config_error("descriptor has no 'sweep' block");
    const SweepSpec& sw = *d.sweep;
    const std::vector<double> grid = make_grid(sw.lo, sw.hi, sw.count, sw.log_spacing);

    if (sw.variable == "omega") {
        const SpectrumConfig cfg = spectrum_config(d, mode_override);
        return spectrum_table(d, cfg, grid);
    }

    if (sw.variable == "pump_ratio") {
        if (!d.power_model)
            throw config_error("pump_ratio sweep needs a 'power_model' block");
        ResultTable t;
        t.columns = {"pump_ratio", "power_w"};
        t.units = {"", "W"};
        t.provenance = provenance_for(d, d.spectrum ? d.spectrum->mode : EvalMode::canonical);
        for (double x : grid)
            t.add_row({x, power_model_eval(d.power_model->slope_w,
                                           d.power_model->intercept_w, x)});
        return t;
    }

    // variable == "r"
    if (d.cosh_scale_w) {
        ResultTable t;
        t.columns = {"r", "power_w"};
        t.units = {"", "W"};
        t.provenance = provenance_for(d, d.spectrum ? d.spectrum->mode : EvalMode::canonical);
        for (double r : grid) t.add_row({r, *d.cosh_scale_w * std::cosh(2.0 * r)});
        return t;
    }
    if (!d.omega_eval)
        throw config_error("r sweep needs 'cosh_scale_w' or 'omega_eval_rad_s'");
    SpectrumConfig cfg = spectrum_config(d, mode_override);
    ResultTable t;
    t.columns = {"r", "var_x", "var_p", "db_x", "db_p", "singular"};
    t.units = {"", "", "", "dB", "dB", ""};
    t.provenance = provenance_for(d, cfg.mode);
    for (double r : grid) {
        cfg.reservoir = SqueezedState(r, d.spectrum->reservoir.theta);
        const auto pts = sweep_spectrum(cfg, {*d.omega_eval});
        const SweepPoint& p = pts.front();
        if (p.singular) {
            const double nan = std::nan("");
            t.add_row({r, nan, nan, nan, nan, 1.0});
        } else {
            t.add_row({r, p.vars.var_x, p.vars.var_p, variance_to_db(p.vars.var_x),
                       variance_to_db(p.vars.var_p), 0.0});
        }
    }
    return t;
}

ResultTable cmd_threshold(const ExperimentDescriptor& d) {
    if (!d.doubly_resonant)
        throw config_error("descriptor has no 'doubly_resonant' block");
    const double e = nonlinear_coefficient(*d.doubly_resonant);
    const double p_th = threshold_power(*d.doubly_resonant);
    const double r = d.spectrum ? d.spectrum->reservoir.r : 0.0;
    const double p_red = reduced_threshold(p_th, r);
    const double nan = std::nan("");
    double g0 = nan, above = 0.0;
    if (d.pump_power_w) {
        const ClassicalGain g = classical_gain(*d.pump_power_w, p_th);
        g0 = g.gain;
        above = g.above_threshold ? 1.0 : 0.0;
    }
    const double delta =
        d.measured_reduced_threshold_w ? p_red - *d.measured_reduced_threshold_w : nan;

    ResultTable t;
    t.columns = {"nonlinear_coefficient", "p_th", "reduced_p_th", "g0",
                 "above_threshold", "delta_vs_measured"};
    t.units = {"1/W", "W", "W", "", "", "W"};
    t.provenance = provenance_for(d, d.spectrum ? d.spectrum->mode : EvalMode::canonical);
    t.add_row({e, p_th, p_red, g0, above, delta});
    return t;
}

ResultTable cmd_comb(const ExperimentDescriptor& d, std::optional<double> tol_override) {
    if (!d.geometry) throw config_error("descriptor has no 'geometry' block");
    const TwoCavityGeometry& g = *d.geometry;
    const double fsr1 = fsr(g.cavity1), fsr2 = fsr(g.cavity2);
    const double tol =
        tol_override ? *tol_override : default_coresonance_tol(g.cavity1, g.cavity2);
    if (tol < 0.0) throw std::domain_error("comb tolerance must be >= 0");
    const CombReport rep = comb_detunings(fsr1, fsr2, g.acceptance_bandwidth_hz, tol);

    ResultTable t;
    t.columns = {"mode_index", "offset_hz", "detuning_hz", "co_resonant"};
    t.units = {"", "Hz", "Hz", ""};
    t.provenance = provenance_for(d, d.spectrum ? d.spectrum->mode : EvalMode::canonical);
    t.provenance["fsr1_hz"] = format_double(fsr1);
    t.provenance["fsr2_hz"] = format_double(fsr2);
    t.provenance["tol_hz"] = format_double(tol);
    for (const CombEntry& e : rep.entries)
        t.add_row({static_cast<double>(e.mode_index), e.offset_hz, e.detuning_hz,
                   e.co_resonant ? 1.0 : 0.0});
    return t;
}

LinewidthResult cmd_linewidth(std::istream& trace, std::optional<double> fmin_override) {
    PsdTrace t = ingest_trace(trace);
    if (fmin_override) {
        if (*fmin_override < 0.0) throw std::domain_error("fmin must be >= 0");
        t.f_min = *fmin_override;
    }
    return estimate_linewidth(t);
}

std::string linewidth_to_json(const LinewidthResult& r) {
    nlohmann::ordered_json j;
    j["toolkit_version"] = toolkit_version;
    j["gamma_hz"] = r.gamma_hz;
    j["surface_d_hz2"] = r.surface_d;
    j["crossover_freqs_hz"] = r.crossover_freqs;
    j["f_lower_hz"] = r.f_lower;
    j["truncated_at_hz"] = r.truncated_at;
    return j.dump(2) + "\n";
}

std::vector<DataPoint> ingest_datapoints(std::istream& in) {
    std::vector<DataPoint> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream row(line.substr(start));
        std::string field;
        std::vector<double> vals;
        while (std::getline(row, field, ',')) {
            try {
                std::size_t used = 0;
                vals.push_back(std::stod(field, &used));
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                    ++used;
                if (used != field.size()) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                throw parse_error("data: bad numeric field '" + field + "'", line_no);
            }
        }
        if (vals.size() != 2 && vals.size() != 3)
            throw parse_error("data: expected x,y[,sigma] columns", line_no);
        DataPoint p;
        p.x = vals[0];
        p.y = vals[1];
        if (vals.size() == 3) {
            if (!(vals[2] > 0.0)) throw parse_error("data: sigma must be > 0", line_no);
            p.sigma = vals[2];
        }
        out.push_back(p);
    }
    if (out.empty()) throw parse_error("data: no data rows");
    return out;
}

FitResult cmd_fit(const std::vector<DataPoint>& data, const std::string& model,
                  const ExperimentDescriptor* d, double alpha_lo, double alpha_hi) {
    if (model == "linear") return fit_linear(data);
    if (model == "cosh") return fit_cosh_scale(data);
    if (model == "alpha") {
        if (!d || !d->spectrum || !d->spectrum->damping || !d->omega_eval)
            throw config_error(
                "alpha fit needs a descriptor with system, damping and omega_eval_rad_s");
        AlphaFitModel m;
        m.config = *d->spectrum;
        m.omega = *d->omega_eval;
        return fit_alpha(data, m, alpha_lo, alpha_hi);
    }
    throw config_error("fit model must be 'linear', 'cosh' or 'alpha'");
}

std::string fit_to_json(const FitResult& r, const std::string& model) {
    nlohmann::ordered_json j;
    j["toolkit_version"] = toolkit_version;
    j["model"] = model;
    j["estimate"] = r.estimate;
    j["residual_sse"] = r.residual_sse;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    return j.dump(2) + "\n";
}

} // namespace sqlaser
