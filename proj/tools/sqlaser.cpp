// sqlaser: squeezed-lasing OPO toolkit CLI.
// Subcommands: spectrum, sweep, threshold, comb, linewidth, fit.
// Exit codes: 0 ok, 2 config error, 3 parse error, 4 domain error,
// 5 threshold singularity.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqlaser/commands.hpp"

namespace {

using namespace sqlaser;

struct GlobalOpts {
    std::string descriptor_path;
    std::string mode; // "", "canonical", "verbatim"
    std::string out_path;
    std::string format = "csv";
};

std::optional<EvalMode> mode_override(const GlobalOpts& g) {
    if (g.mode.empty()) return {};
    if (g.mode == "canonical") return EvalMode::canonical;
    if (g.mode == "verbatim") return EvalMode::verbatim;
    throw config_error("--mode must be canonical or verbatim");
}

ExperimentDescriptor need_descriptor(const GlobalOpts& g) {
    if (g.descriptor_path.empty()) throw config_error("--descriptor is required");
    return load_descriptor_file(g.descriptor_path);
}

void emit(const std::string& text, const GlobalOpts& g) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + g.out_path);
    out << text;
}

void emit_table(const ResultTable& t, const GlobalOpts& g) {
    std::ostringstream os;
    if (g.format == "csv") write_csv(t, os);
    else if (g.format == "json") write_json(t, os);
    else throw config_error("--format must be csv or json");
    emit(os.str(), g);
}

// Human-readable granularity for the terminal summary only; data files keep
// full precision.
std::string db2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string mw3(double w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", w * 1e3);
    return buf;
}

int run(int argc, char** argv) {
    CLI::App app{"squeezed-lasing OPO numerical toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--descriptor", g.descriptor_path, "experiment descriptor JSON");
    app.add_option("--mode", g.mode, "evaluation mode: canonical|verbatim");
    app.add_option("--out", g.out_path, "output file (default: stdout)");
    app.add_option("--format", g.format, "output format: csv|json");

    auto* sp = app.add_subcommand("spectrum", "quadrature noise spectrum over omega");
    auto* sw = app.add_subcommand("sweep", "sweep over the descriptor's axis");
    auto* th = app.add_subcommand("threshold", "threshold power and parametric gain");

    auto* cb = app.add_subcommand("comb", "two-cavity comb co-resonance analysis");
    double tol_hz = -1.0;
    cb->add_option("--tol", tol_hz, "co-resonance tolerance, Hz (default: half linewidth)");

    auto* lw = app.add_subcommand("linewidth", "beta-separation-line linewidth from a PSD trace");
    std::string trace_path;
    double fmin_hz = -1.0;
    lw->add_option("trace", trace_path, "PSD trace CSV")->required();
    lw->add_option("--fmin", fmin_hz, "lower integration bound override, Hz");

    auto* ft = app.add_subcommand("fit", "least-squares fit of a data file");
    std::string data_path, model;
    double alpha_lo = 0.0, alpha_hi = 5.0;
    ft->add_option("data", data_path, "x,y[,sigma] CSV")->required();
    ft->add_option("--model", model, "linear|cosh|alpha")->required();
    ft->add_option("--alpha-lo", alpha_lo, "alpha search lower bound");
    ft->add_option("--alpha-hi", alpha_hi, "alpha search upper bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help/version exit 0; anything else is a configuration error
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (sp->parsed()) {
        const ExperimentDescriptor d = need_descriptor(g);
        const ResultTable t = cmd_spectrum(d, {}, mode_override(g));
        emit_table(t, g);
        if (!g.out_path.empty() && !t.rows.empty()) {
            const auto& last = t.rows.back();
            if (last[5] == 0.0)
                std::cout << "spectrum: " << t.rows.size() << " points, last point "
                          << db2(last[3]) << " / " << db2(last[4]) << " dB\n";
        }
    } else if (sw->parsed()) {
        const ExperimentDescriptor d = need_descriptor(g);
        emit_table(cmd_sweep(d, mode_override(g)), g);
    } else if (th->parsed()) {
        const ExperimentDescriptor d = need_descriptor(g);
        const ResultTable t = cmd_threshold(d);
        emit_table(t, g);
        if (!g.out_path.empty()) {
            const auto& row = t.rows.front();
            std::cout << "threshold: P_th = " << mw3(row[1]) << " mW, P'_th = "
                      << mw3(row[2]) << " mW\n";
        }
    } else if (cb->parsed()) {
        const ExperimentDescriptor d = need_descriptor(g);
        std::optional<double> tol;
        if (tol_hz >= 0.0) tol = tol_hz;
        emit_table(cmd_comb(d, tol), g);
    } else if (lw->parsed()) {
        std::ifstream in(trace_path);
        if (!in) throw config_error("cannot open trace file: " + trace_path);
        std::optional<double> fmin;
        if (fmin_hz >= 0.0) fmin = fmin_hz;
        const LinewidthResult r = cmd_linewidth(in, fmin);
        emit(linewidth_to_json(r), g);
    } else if (ft->parsed()) {
        std::ifstream in(data_path);
        if (!in) throw config_error("cannot open data file: " + data_path);
        const std::vector<DataPoint> data = ingest_datapoints(in);
        std::optional<ExperimentDescriptor> d;
        if (!g.descriptor_path.empty()) d = load_descriptor_file(g.descriptor_path);
        const FitResult r =
            cmd_fit(data, model, d ? &*d : nullptr, alpha_lo, alpha_hi);
        emit(fit_to_json(r, model), g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sqlaser::threshold_singularity& e) {
        std::cerr << "error: threshold: " << e.what() << "\n";
        return 5;
    } catch (const sqlaser::parse_error& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 3;
    } catch (const sqlaser::config_error& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
