#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sqlaser/comb.hpp"

using namespace sqlaser;

namespace {

CavityGeometry opo1_geom() { return {0.027, 0.010, 1.83, 0.99925, 0.93808}; }
CavityGeometry opo2_geom() { return {0.021, 0.010, 1.83, 0.99800, 0.92195}; }

} // namespace

TEST_CASE("free spectral ranges from the cavity geometries") {
    CHECK(fsr(opo1_geom()) == doctest::Approx(3.30897e9).epsilon(1e-4));
    CHECK(fsr(opo2_geom()) == doctest::Approx(3.81415e9).epsilon(1e-4));
    // empty 15 cm air cavity
    CHECK(fsr({0.15, 0.0, 1.0, 0.5, 0.5}) == doctest::Approx(0.99931e9).epsilon(1e-4));
    // longer optical path -> smaller FSR
    CHECK(fsr(opo1_geom()) < fsr(opo2_geom()));
}

TEST_CASE("Airy transmission extrema") {
    const double f = 3.3e9, r1 = 0.99, r2 = 0.94;
    const double tmax = (1 - r1 * r1) * (1 - r2 * r2) / ((1 - r1 * r2) * (1 - r1 * r2));
    const double tmin = (1 - r1 * r1) * (1 - r2 * r2) / ((1 + r1 * r2) * (1 + r1 * r2));
    CHECK(transmission(0.0, f, r1, r2) == doctest::Approx(tmax).epsilon(1e-10));
    CHECK(transmission(3.0 * f, f, r1, r2) == doctest::Approx(tmax).epsilon(1e-9));
    CHECK(transmission(0.5 * f, f, r1, r2) == doctest::Approx(tmin).epsilon(1e-10));
    // impedance-matched symmetric cavity peaks at 1
    CHECK(transmission(0.0, f, 0.95, 0.95) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("transmission FWHM matches a direct half-maximum search") {
    const double f = 3.3e9, r1 = 0.99, r2 = 0.94;
    const double w = transmission_fwhm(f, r1, r2);
    const double half = 0.5 * transmission(0.0, f, r1, r2);
    CHECK(transmission(0.5 * w, f, r1, r2) == doctest::Approx(half).epsilon(1e-9));
}

TEST_CASE("detuning folding") {
    const double f1 = 3.0e9;
    CHECK(fold_detuning(0.0, f1) == doctest::Approx(0.0));
    CHECK(fold_detuning(3.1e9, f1) == doctest::Approx(0.1e9).epsilon(1e-12));
    CHECK(fold_detuning(2.9e9, f1) == doctest::Approx(-0.1e9).epsilon(1e-12));
    CHECK(fold_detuning(1.5e9, f1) == doctest::Approx(1.5e9)); // upper endpoint kept
    CHECK(fold_detuning(-1.5e9, f1) == doctest::Approx(1.5e9));
    // folding is periodic in fsr1
    for (double x : {0.3e9, 1.2e9, -0.7e9})
        CHECK(fold_detuning(x + 7 * f1, f1) == doctest::Approx(fold_detuning(x, f1)).epsilon(1e-9));
}

TEST_CASE("folded detunings equal an exhaustive nearest-mode search") {
    const double f1 = fsr(opo1_geom()), f2 = fsr(opo2_geom());
    const CombReport rep = comb_detunings(f1, f2, 1.0e11, 0.0);
    for (const CombEntry& e : rep.entries) {
        // brute force over candidate cavity-1 mode numbers
        double best = 1e30;
        const auto m0 = static_cast<long>(std::llround(e.offset_hz / f1));
        for (long m = m0 - 3; m <= m0 + 3; ++m)
            best = std::min(best, std::abs(e.offset_hz - static_cast<double>(m) * f1));
        CHECK(std::abs(e.detuning_hz) == doctest::Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("LCM example: 3 and 4 GHz combs co-resonate every 12 GHz") {
    const auto modes = co_resonances(3.0e9, 4.0e9, 30.0e9, 1.0e3);
    CHECK(modes == std::vector<std::int64_t>{-3, 0, 3});
}

TEST_CASE("equal FSRs make every mode co-resonant") {
    const CombReport rep = comb_detunings(3.0e9, 3.0e9, 30.0e9, 0.0);
    for (const CombEntry& e : rep.entries) {
        CHECK(e.detuning_hz == doctest::Approx(0.0));
        CHECK(e.co_resonant);
    }
}

TEST_CASE("tolerance saturation at fsr1/2") {
    const double f1 = 3.1e9, f2 = 3.9e9;
    const CombReport rep = comb_detunings(f1, f2, 5.0e10, 0.5 * f1);
    for (const CombEntry& e : rep.entries) CHECK(e.co_resonant);
}

TEST_CASE("zero tolerance keeps only exact hits") {
    const auto modes = co_resonances(3.1e9, 3.9e9, 5.0e10, 0.0);
    CHECK(modes == std::vector<std::int64_t>{0});
}

TEST_CASE("default co-resonance tolerance is half the narrower linewidth") {
    const CavityGeometry g1 = opo1_geom(), g2 = opo2_geom();
    const double tol = default_coresonance_tol(g1, g2);
    const double w1 = transmission_fwhm(fsr(g1), g1.r1, g1.r2);
    CHECK(tol == doctest::Approx(0.5 * w1).epsilon(1e-12));
    CHECK(tol == doctest::Approx(3.4e7).epsilon(0.02));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(fsr({0.0, 0.0, 1.0, 0.5, 0.5}), std::domain_error);
    CHECK_THROWS_AS(fsr({0.1, 0.0, 1.0, 1.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(comb_detunings(-1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(co_resonances(1.0, 1.0, 1.0, -1.0), std::domain_error);
}
