// Acceptance suite: one pass/fail line per criterion.  Criteria whose pinned
// windows are unreachable with the faithfully implemented formulas are kept
// red on purpose and report the achieved value next to the pinned one.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "sqlaser/comb.hpp"
#include "sqlaser/commands.hpp"
#include "sqlaser/fitting.hpp"
#include "sqlaser/linewidth.hpp"
#include "sqlaser/threshold.hpp"

#include "oracle.hpp"

using namespace sqlaser;
constexpr double pi = std::numbers::pi;

namespace {

const std::string src_dir = SQLASER_SOURCE_DIR;

void criterion(int n, bool ok, const std::string& detail) {
    std::printf("ACCEPTANCE %02d %s: %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    const std::string msg = "criterion " + std::to_string(n) + ": " + detail;
    CHECK_MESSAGE(ok, msg);
}

ExperimentDescriptor preset(const std::string& name) {
    return load_descriptor_file(src_dir + "/data/presets/" + name + ".json");
}

double fixture_linewidth(const std::string& name) {
    std::ifstream in(src_dir + "/data/fixtures/" + name + ".csv");
    REQUIRE(in.good());
    return cmd_linewidth(in).gamma_hz;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

TEST_CASE("01 threshold reproduction") {
    const ResultTable t = cmd_threshold(preset("paper-opo2"));
    const double p_th_mw = t.rows[0][1] * 1e3;
    criterion(1, p_th_mw >= 43.0 && p_th_mw <= 47.0,
              "P_th = " + fmt(p_th_mw) + " mW (window [43, 47], hand value 44.6)");
}

TEST_CASE("02 loss-chain reproduction") {
    const double v = apply_loss(db_to_variance(-10.4), 0.95);
    const double db = variance_to_db(v);
    const double r = variance_to_r(v);
    criterion(2, std::abs(db - (-8.64)) <= 0.01 && std::abs(r - 0.995) <= 0.005,
              "-10.4 dB through 5% loss -> " + fmt(db) + " dB, r = " + fmt(r));
}

TEST_CASE("03 gain-enhancement factor") {
    const double ratio = enhanced_coupling(1.0, 0.99);
    criterion(3, std::abs(ratio - 3.667) <= 0.001,
              "cosh(2*0.99) = " + fmt(ratio) +
                  " (pinned window 3.667 +/- 0.001; cosh(1.98) = 3.690406, "
                  "published rounding '3.7 times')");
}

TEST_CASE("04 reduced threshold") {
    const double p_red_mw = reduced_threshold(0.045, 0.99) * 1e3;
    const double gap = std::abs(p_red_mw - 11.4) / 11.4;
    criterion(4, std::abs(p_red_mw - 12.3) <= 0.1 && gap <= 0.10,
              "P'_th = " + fmt(p_red_mw) + " mW (pinned 12.3 +/- 0.1; 45/cosh(1.98) = "
                  "12.1938), delta vs measured 11.4 mW = " + fmt(gap * 100) + "%");
}

TEST_CASE("05 beta-line white-noise oracle") {
    const double gamma = fixture_linewidth("white_h0_1e4");
    const double want = pi * 1e4;
    criterion(5, std::abs(gamma - want) / want <= 0.01,
              "white h0 = 1e4 -> Gamma = " + fmt(gamma) + " Hz (analytic 31415.9)");
}

TEST_CASE("06 measured-linewidth fixture regression") {
    const std::pair<const char*, double> rows[] = {{"r080", 30000.0}, {"r089", 27800.0},
                                                   {"r094", 23000.0}, {"r097", 18700.0},
                                                   {"r099", 15000.0}};
    bool ok = true;
    std::string detail;
    for (const auto& [name, want] : rows) {
        const double got = fixture_linewidth(name);
        ok = ok && std::abs(got - want) / want <= 0.02;
        detail += std::string(name) + " = " + fmt(got / 1e3) + " kHz  ";
    }
    criterion(6, ok, detail + "(targets 30/27.8/23/18.7/15, 2%)");
}

TEST_CASE("07 comb reproduction") {
    const ExperimentDescriptor d = preset("paper-opo1");
    const double f1 = fsr(d.geometry->cavity1), f2 = fsr(d.geometry->cavity2);
    const bool fsr_ok = std::abs(f1 - 3.33e9) / 3.33e9 <= 0.02 &&
                        std::abs(f2 - 3.76e9) / 3.76e9 <= 0.02;
    const ResultTable t = cmd_comb(d);
    int co = 0;
    for (const auto& row : t.rows) co += row[3] != 0.0;
    criterion(7, fsr_ok && co == 3,
              "FSR = " + fmt(f1 / 1e9) + " / " + fmt(f2 / 1e9) + " GHz, " +
                  std::to_string(co) +
                  " co-resonant modes at default tolerance (pinned: exactly 3; no "
                  "geometry within the 2% FSR windows yields fewer than 5)");
}

TEST_CASE("08 shot-noise invariant") {
    SpectrumConfig cfg;
    cfg.params = {0.0, 0.0, 0.0, 4.3e8};
    cfg.reservoir = SqueezedState(0.0, 0.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double w = std::pow(10.0, 3.0 + 8.0 * i / 199.0);
        const QuadVariance v = quadrature_variance(cfg, w);
        worst = std::max({worst, std::abs(v.var_x - 1.0), std::abs(v.var_p - 1.0)});
    }
    criterion(8, worst < 1e-12, "max |var - 1| = " + fmt(worst) + " over 200 points");
}

TEST_CASE("09 uncertainty property") {
    std::mt19937 rng(2024);
    double worst = 2.0;
    for (int i = 0; i < 1000; ++i) {
        const testutil::Draw d = testutil::random_below_threshold(rng);
        SpectrumConfig cfg{d.p, d.s, EvalMode::canonical, {}};
        const QuadVariance v = quadrature_variance(cfg, d.omega);
        worst = std::min(worst, v.var_x * v.var_p);
    }
    criterion(9, worst >= 1.0 - 1e-9,
              "min var_x*var_p = " + fmt(worst) + " over 1000 random draws");
}

TEST_CASE("10 oracle equivalence") {
    std::mt19937 rng(31337);
    double worst_can = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const testutil::Draw d = testutil::random_below_threshold(rng);
        SpectrumConfig cfg{d.p, d.s, EvalMode::canonical, {}};
        const QuadVariance got = quadrature_variance(cfg, d.omega);
        const QuadVariance want = testutil::Oracle(d.p, d.s, d.omega).variance(d.s);
        worst_can = std::max({worst_can, std::abs(got.var_x - want.var_x) / want.var_x,
                              std::abs(got.var_p - want.var_p) / want.var_p});
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_verb = 0.0;
    for (int i = 0; i < 1000; ++i) {
        using std::complex;
        using namespace std::complex_literals;
        BareOpoParams p{0.4 * u(rng), 0.01 * (u(rng) - 0.5), pi, 0.15};
        SqueezedState s(1.5 * u(rng), 0.0);
        const double w = 2.0 * (u(rng) - 0.5);
        const double ch2 = std::cosh(2 * s.r), sh2 = std::sinh(2 * s.r);
        const complex<double> a = -1.0i * (p.delta_c * ch2 + p.g * sh2);
        const complex<double> b =
            1.0i * (p.delta_c * sh2 + p.g * ch2) * std::polar(1.0, -s.theta);
        const double sk = std::sqrt(p.kappa);
        const complex<double> den = (1.0i * w - a + sk) * (-1.0i * w - std::conj(a) + sk);
        const complex<double> c1 = p.kappa * p.kappa / (2.0 * den) + std::sqrt(1 - p.kappa);
        const complex<double> c2 = p.kappa / den * (-1.0i * w + a - b);
        const double want_x =
            std::real(c1 * c1 * std::exp(2 * s.r) - c2 * c2 * std::exp(-2 * s.r));
        SpectrumConfig cfg{p, s, EvalMode::verbatim, {}};
        const QuadVariance got = quadrature_variance(cfg, w);
        worst_verb = std::max(worst_verb, std::abs(got.var_x - want_x) /
                                              std::max(1.0, std::abs(want_x)));
    }
    criterion(10, worst_can <= 1e-10 && worst_verb <= 1e-12,
              "canonical worst rel = " + fmt(worst_can) + " (1e-10), verbatim worst rel = " +
                  fmt(worst_verb) + " (1e-12)");
}

TEST_CASE("11 subthreshold variance evaluation") {
    const QuadVariance v = subthreshold_variance(70.0 / 90.0, 1.8e7, 6.8e7, 0.97, 0.030);
    const double db = variance_to_db(v.var_p);
    criterion(11, std::abs(db - (-9.36)) <= 0.05,
              "V- = " + fmt(db) + " dB (pinned -9.36 +/- 0.05; the published measured "
                  "value -10.4 dB is a recorded discrepancy, not a target)");
}

TEST_CASE("12 alpha-fit recovery and endpoint comparison") {
    const ExperimentDescriptor d = preset("paper-fig4b");
    AlphaFitModel m;
    m.config = *d.spectrum;
    m.omega = *d.omega_eval;
    bool recovered = true;
    for (double truth : {0.5, 1.2, 2.1, 2.9, 0.0}) {
        std::vector<DataPoint> data;
        for (double r = 0.5; r <= 1.1001; r += 0.1)
            data.push_back({r, m.model_db(r, truth), 0.0});
        const FitResult fit = fit_alpha(data, m, 0.0, 5.0);
        recovered = recovered && std::abs(fit.estimate[0] - truth) <= 1e-3;
    }
    const double db08 = m.model_db(0.80, 2.1);
    const double db99 = m.model_db(0.99, 2.1);
    const bool endpoints = std::abs(db08 - (-3.2)) <= 1.0 && std::abs(db99 - (-5.4)) <= 1.0;
    criterion(12, recovered && endpoints,
              std::string("alpha recovery ") + (recovered ? "ok" : "FAILED") +
                  "; endpoints " + fmt(db08) + " / " + fmt(db99) +
                  " dB vs -3.2 / -5.4 (damping floor 1-eta bounds them to -1.34 / -4.73)");
}

TEST_CASE("13 power-model anchors") {
    const FitResult lin = fit_linear({{1.0, 0.5e-3, 0.0}, {1.75, 2.6e-3, 0.0}});
    const double slope = lin.estimate[0] * 1e3, icept = lin.estimate[1] * 1e3;
    const bool lin_ok = std::abs(slope - 2.8) <= 0.005 && std::abs(icept + 2.3) <= 0.005;
    const FitResult cosh_fit = fit_cosh_scale({{0.99, 2.6e-3, 0.0}});
    const double s_mw = cosh_fit.estimate[0] * 1e3;
    const bool cosh_ok = std::abs(s_mw - 0.709) <= 0.001;
    criterion(13, lin_ok && cosh_ok,
              "slope " + fmt(slope) + ", intercept " + fmt(icept) + ", cosh scale " +
                  fmt(s_mw) + " mW (pinned 0.709 +/- 0.001; 2.6/cosh(1.98) = 0.704529)");
}

TEST_CASE("14 determinism of every command") {
    bool ok = true;
    auto render = [](const ResultTable& t) {
        std::ostringstream os;
        write_csv(t, os);
        return os.str();
    };
    {
        const ExperimentDescriptor d = preset("paper-opo1");
        ok = ok && render(cmd_spectrum(d)) == render(cmd_spectrum(d));
        ok = ok && render(cmd_comb(d)) == render(cmd_comb(d));
    }
    {
        const ExperimentDescriptor d = preset("paper-opo2");
        ok = ok && render(cmd_sweep(d)) == render(cmd_sweep(d));
        ok = ok && render(cmd_threshold(d)) == render(cmd_threshold(d));
    }
    {
        const ExperimentDescriptor d = preset("paper-fig4b");
        ok = ok && render(cmd_sweep(d)) == render(cmd_sweep(d));
    }
    {
        std::ifstream a(src_dir + "/data/fixtures/r099.csv");
        std::ifstream b(src_dir + "/data/fixtures/r099.csv");
        ok = ok && linewidth_to_json(cmd_linewidth(a)) == linewidth_to_json(cmd_linewidth(b));
    }
    criterion(14, ok, "repeated cmd_* runs on the shipped presets are byte-identical");
}
