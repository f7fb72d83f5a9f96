#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "sqlaser/linewidth.hpp"

using namespace sqlaser;
constexpr double pi = std::numbers::pi;

namespace {

PsdTrace white_trace(double h0, double f_lo, double f_hi, std::size_t n) {
    PsdTrace t;
    t.value_kind = PsdKind::freq_noise;
    t.f_min = f_lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = std::exp(std::log(f_lo) +
                                  (std::log(f_hi) - std::log(f_lo)) * i / double(n - 1));
        t.samples.push_back({f, h0});
    }
    return t;
}

} // namespace

TEST_CASE("beta line") {
    CHECK(beta_line(1.0) == doctest::Approx(8.0 * std::numbers::ln2 / (pi * pi)));
    CHECK(beta_line(1e4) / 1e4 == doctest::Approx(beta_line(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(beta_line(0.0), std::domain_error);
}

TEST_CASE("white-noise analytic value: Gamma = pi * h0") {
    const LinewidthResult r = estimate_linewidth(white_trace(1e4, 10.0, 1e6, 10000));
    CHECK(r.gamma_hz == doctest::Approx(pi * 1e4).epsilon(0.01));
    CHECK(r.crossover_freqs.size() == 1);
    // crossing at f = pi^2 h0 / (8 ln 2)
    CHECK(r.crossover_freqs[0] ==
          doctest::Approx(pi * pi * 1e4 / (8.0 * std::numbers::ln2)).epsilon(1e-3));
}

TEST_CASE("grid refinement converges") {
    const double coarse = estimate_linewidth(white_trace(1e4, 10.0, 1e6, 500)).gamma_hz;
    const double fine = estimate_linewidth(white_trace(1e4, 10.0, 1e6, 8000)).gamma_hz;
    const double finer = estimate_linewidth(white_trace(1e4, 10.0, 1e6, 16000)).gamma_hz;
    CHECK(std::abs(fine - finer) < std::abs(coarse - finer) + 1e-9);
    CHECK(std::abs(fine - finer) / finer < 1e-4);
}

TEST_CASE("scale covariance") {
    // trace truncated below the crossover: S -> c*S scales D exactly by c
    // (the full white trace instead scales by c^2 because the crossover moves)
    PsdTrace t = white_trace(1e4, 10.0, 1e4, 2000);
    const double d1 = high_index_surface(t).surface_d;
    for (PsdSample& s : t.samples) s.value *= 4.0;
    const double d4 = high_index_surface(t).surface_d;
    CHECK(d4 / d1 == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(linewidth_from_surface(d4) ==
          doctest::Approx(2.0 * linewidth_from_surface(d1)).epsilon(1e-9));
    // full trace: Gamma = pi*h0 is itself linear in the scale
    const double g1 = estimate_linewidth(white_trace(1e4, 10.0, 1e6, 2000)).gamma_hz;
    const double g4 = estimate_linewidth(white_trace(4e4, 10.0, 1e6, 2000)).gamma_hz;
    CHECK(g4 == doctest::Approx(4.0 * g1).epsilon(0.02));
}

TEST_CASE("all-below-line trace gives zero linewidth") {
    PsdTrace t = white_trace(1e-3, 10.0, 1e6, 200);
    const LinewidthResult r = estimate_linewidth(t);
    CHECK(r.surface_d == doctest::Approx(0.0));
    CHECK(r.gamma_hz == doctest::Approx(0.0));
    CHECK(r.crossover_freqs.empty());
}

TEST_CASE("f_min clips the leading samples") {
    PsdTrace t = white_trace(1e4, 10.0, 1e6, 4000);
    t.f_min = 100.0;
    const SurfaceResult s = high_index_surface(t);
    CHECK(s.f_lower == doctest::Approx(100.0));
    t.f_min = 0.0; // falls back to the first sample frequency
    CHECK(high_index_surface(t).f_lower == doctest::Approx(10.0));
}

TEST_CASE("dBm calibration") {
    PsdTrace t;
    t.value_kind = PsdKind::dbm_raw;
    t.rbw_hz = 300e3;
    t.slope_k0 = 1e-5;
    t.z0_ohm = 50.0;
    const double s_true = 1e4; // Hz^2/Hz
    const double dbm = 10.0 * std::log10(s_true * (1e-5 * 1e-5 / 50.0) * 300e3 * 1000.0);
    t.samples = {{10.0, dbm}, {100.0, dbm}};
    const PsdTrace cal = convert_psd(t);
    CHECK(cal.samples[0].value == doctest::Approx(s_true).epsilon(1e-10));
    PsdTrace missing = t;
    missing.rbw_hz.reset();
    CHECK_THROWS_AS(convert_psd(missing), config_error);
}

TEST_CASE("trace ingestion") {
    std::istringstream in(
        "# kind=freq_noise fmin=10\n"
        "10,100.0\n"
        "20,90.0\n"
        "# trailing comment\n"
        "40,80.0\n");
    const PsdTrace t = ingest_trace(in);
    CHECK(t.samples.size() == 3);
    CHECK(t.f_min == doctest::Approx(10.0));
    CHECK(t.value_kind == PsdKind::freq_noise);
    CHECK(t.samples[2].value == doctest::Approx(80.0));
}

TEST_CASE("ingestion errors carry line numbers") {
    std::istringstream bad_number("# kind=freq_noise\n10,1.0\n20,oops\n");
    try {
        ingest_trace(bad_number);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
    std::istringstream not_increasing("# kind=freq_noise\n10,1.0\n10,2.0\n");
    try {
        ingest_trace(not_increasing);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
    std::istringstream no_kind("10,1.0\n20,2.0\n");
    CHECK_THROWS_AS(ingest_trace(no_kind), parse_error);
    std::istringstream dbm_no_cal("# kind=dbm_raw\n10,1.0\n20,2.0\n");
    CHECK_THROWS_AS(ingest_trace(dbm_no_cal), parse_error);
}

TEST_CASE("crossing interpolation is exact for piecewise-linear data") {
    // two samples straddling the beta line; both S and the line are linear,
    // so the crossing and the clipped trapezoid are exact
    const double f1 = 100.0, f2 = 200.0;
    const double s1 = beta_line(f1) + 50.0; // above
    const double s2 = beta_line(f2) - 30.0; // below
    PsdTrace t;
    t.value_kind = PsdKind::freq_noise;
    t.samples = {{f1, s1}, {f2, s2}};
    const SurfaceResult r = high_index_surface(t);
    REQUIRE(r.crossover_freqs.size() == 1);
    const double fc = r.crossover_freqs[0];
    // excess is linear: e(f1)=50, e(f2)=-30 -> crossing at 100 + 100*50/80
    CHECK(fc == doctest::Approx(100.0 + 100.0 * 50.0 / 80.0).epsilon(1e-12));
    const double sc = s1 + (s2 - s1) * (fc - f1) / (f2 - f1);
    CHECK(r.surface_d == doctest::Approx(0.5 * (s1 + sc) * (fc - f1)).epsilon(1e-12));
}

TEST_CASE("linewidth from surface") {
    CHECK(linewidth_from_surface(0.0) == doctest::Approx(0.0));
    CHECK(linewidth_from_surface(1.0) == doctest::Approx(std::sqrt(8.0 * std::numbers::ln2)));
    CHECK_THROWS_AS(linewidth_from_surface(-1.0), std::domain_error);
}
