#include "sqlaser/descriptor.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sqlaser {

namespace {

using nlohmann::json;

double require_num(const json& j, const std::string& ctx, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw config_error("descriptor: missing numeric field '" + ctx + "." + key + "'");
    return j[key].get<double>();
}

double opt_num(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw config_error(std::string("descriptor: field '") + key + "' must be numeric");
    return j[key].get<double>();
}

CavityGeometry parse_geometry(const json& j, const std::string& ctx) {
    CavityGeometry g;
    g.air_path = require_num(j, ctx, "air_path_m");
    g.crystal_len = require_num(j, ctx, "crystal_len_m");
    g.crystal_index = require_num(j, ctx, "crystal_index");
    g.r1 = require_num(j, ctx, "r1");
    g.r2 = require_num(j, ctx, "r2");
    g.validate();
    return g;
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace

ExperimentDescriptor load_descriptor(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("descriptor JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("descriptor: top level must be an object");

    ExperimentDescriptor d;
    d.name = j.value("name", std::string{});
    d.content_hash = fnv1a_hex(j.dump());

    if (j.contains("system")) {
        SpectrumConfig cfg;
        const json& s = j["system"];
        cfg.params.g = require_num(s, "system", "g_rad_s");
        cfg.params.delta_c = opt_num(s, "delta_c_rad_s", 0.0);
        cfg.params.theta_p = opt_num(s, "theta_p_rad", 0.0);
        cfg.params.kappa = require_num(s, "system", "kappa_rad_s");
        cfg.params.validate();
        if (j.contains("reservoir")) {
            const json& r = j["reservoir"];
            cfg.reservoir = SqueezedState(require_num(r, "reservoir", "r"),
                                          opt_num(r, "theta_rad", 0.0));
            d.propagation_efficiency = opt_num(r, "propagation_efficiency", 1.0);
        }
        const std::string mode = j.value("mode", std::string("canonical"));
        if (mode == "canonical") cfg.mode = EvalMode::canonical;
        else if (mode == "verbatim") cfg.mode = EvalMode::verbatim;
        else throw config_error("descriptor: mode must be 'canonical' or 'verbatim'");
        if (j.contains("damping")) {
            DampingModel dm;
            dm.alpha = require_num(j["damping"], "damping", "alpha");
            dm.r_p = require_num(j["damping"], "damping", "r_p");
            if (dm.alpha < 0.0) throw config_error("descriptor: damping.alpha must be >= 0");
            cfg.damping = dm;
        }
        d.spectrum = cfg;
    }

    if (j.contains("budget")) {
        const json& b = j["budget"];
        LossBudget lb;
        lb.eta_pro = require_num(b, "budget", "eta_pro");
        lb.eta_vis = require_num(b, "budget", "eta_vis");
        lb.eta_qe = require_num(b, "budget", "eta_qe");
        lb.theta_tot = opt_num(b, "theta_tot_rad", 0.0);
        lb.t_coupler = opt_num(b, "t_coupler", 0.0);
        lb.l_roundtrip = opt_num(b, "l_roundtrip", 0.0);
        if (b.contains("eta_esc"))
            lb.eta_esc = b["eta_esc"].get<double>();
        else if (lb.t_coupler > 0.0)
            lb.eta_esc = escape_efficiency(lb.t_coupler, lb.l_roundtrip);
        else
            throw config_error("descriptor: budget needs eta_esc or t_coupler/l_roundtrip");
        lb.validate();
        d.budget = lb;
    }

    if (j.contains("subthreshold")) {
        const json& s = j["subthreshold"];
        SubthresholdParams sp;
        sp.pump_ratio = require_num(s, "subthreshold", "pump_ratio");
        sp.f_hz = require_num(s, "subthreshold", "f_hz");
        sp.gamma_hz = require_num(s, "subthreshold", "gamma_hz");
        d.subthreshold = sp;
    }

    if (j.contains("geometry")) {
        const json& g = j["geometry"];
        TwoCavityGeometry tg;
        if (!g.contains("cavity1") || !g.contains("cavity2"))
            throw config_error("descriptor: geometry needs cavity1 and cavity2");
        tg.cavity1 = parse_geometry(g["cavity1"], "geometry.cavity1");
        tg.cavity2 = parse_geometry(g["cavity2"], "geometry.cavity2");
        tg.acceptance_bandwidth_hz = opt_num(g, "acceptance_bandwidth_hz", 2e12);
        d.geometry = tg;
    }

    if (j.contains("doubly_resonant")) {
        const json& p = j["doubly_resonant"];
        DoublyResonantParams dr;
        dr.t_p = require_num(p, "doubly_resonant", "t_p");
        dr.v_p = require_num(p, "doubly_resonant", "v_p");
        dr.t_s = require_num(p, "doubly_resonant", "t_s");
        dr.l_s = require_num(p, "doubly_resonant", "l_s");
        dr.d_eff = require_num(p, "doubly_resonant", "d_eff_m_per_v");
        dr.omega_s = require_num(p, "doubly_resonant", "omega_s_rad_s");
        dr.omega_i = require_num(p, "doubly_resonant", "omega_i_rad_s");
        dr.omega_p = require_num(p, "doubly_resonant", "omega_p_rad_s");
        dr.n_p = require_num(p, "doubly_resonant", "n_p");
        dr.crystal_len = require_num(p, "doubly_resonant", "crystal_len_m");
        dr.h_focus = opt_num(p, "h_focus", 1.0);
        dr.validate();
        d.doubly_resonant = dr;
    }

    if (j.contains("pump_power_w")) d.pump_power_w = j["pump_power_w"].get<double>();
    if (j.contains("measured_reduced_threshold_w"))
        d.measured_reduced_threshold_w = j["measured_reduced_threshold_w"].get<double>();
    if (j.contains("power_model")) {
        PowerModel pm;
        pm.slope_w = require_num(j["power_model"], "power_model", "slope_w");
        pm.intercept_w = require_num(j["power_model"], "power_model", "intercept_w");
        d.power_model = pm;
    }
    if (j.contains("cosh_scale_w")) d.cosh_scale_w = j["cosh_scale_w"].get<double>();
    if (j.contains("omega_eval_rad_s")) d.omega_eval = j["omega_eval_rad_s"].get<double>();

    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        SweepSpec sw;
        sw.variable = s.value("variable", std::string{});
        if (sw.variable != "pump_ratio" && sw.variable != "r" && sw.variable != "omega")
            throw config_error("descriptor: sweep.variable must be pump_ratio, r or omega");
        sw.lo = require_num(s, "sweep", "lo");
        sw.hi = require_num(s, "sweep", "hi");
        const double cnt = require_num(s, "sweep", "count");
        sw.count = static_cast<std::size_t>(cnt);
        const std::string spacing = s.value("spacing", std::string("linear"));
        if (spacing == "log") sw.log_spacing = true;
        else if (spacing != "linear")
            throw config_error("descriptor: sweep.spacing must be linear or log");
        if (sw.count < 2 || !(sw.lo < sw.hi))
            throw config_error("descriptor: sweep needs count >= 2 and lo < hi");
        if (sw.log_spacing && !(sw.lo > 0.0))
            throw config_error("descriptor: log sweep requires lo > 0");
        d.sweep = sw;
    }

    return d;
}

ExperimentDescriptor load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open descriptor file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_descriptor(ss.str());
}

} // namespace sqlaser
