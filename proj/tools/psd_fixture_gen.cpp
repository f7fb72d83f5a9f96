// Generates the synthetic frequency-noise PSD fixtures shipped under
// data/fixtures/.  Each trace is a white plateau h0 = Gamma/pi that meets the
// beta separation line at fc = pi*Gamma/(8 ln 2), followed by an f^-3 rolloff
// that stays below the line, so the continuum surface integral gives back
// Gamma up to the f_min truncation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "sqlaser/result_table.hpp"

namespace {

constexpr double f_lo = 10.0;  // Hz
constexpr double f_hi = 1.0e6; // Hz

double plateau_psd(double f, double h0, double fc) {
    return f <= fc ? h0 : h0 * (fc / f) * (fc / f) * (fc / f);
}

void write_trace(const std::string& path, double gamma_hz, std::size_t n,
                 bool as_dbm) {
    const double h0 = gamma_hz / std::numbers::pi;
    const double fc = std::numbers::pi * gamma_hz / (8.0 * std::numbers::ln2);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (as_dbm) {
        out << "# kind=dbm_raw rbw=300000 k0=1e-05 z0=50 fmin=10\n";
    } else {
        out << "# kind=freq_noise fmin=10\n";
    }
    const double llo = std::log(f_lo), lhi = std::log(f_hi);
    for (std::size_t i = 0; i < n; ++i) {
        const double f =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
        double v = plateau_psd(f, h0, fc);
        if (as_dbm) {
            // invert the calibration: dBm = 10 log10(S * k0^2/Z0 * RBW * 1000)
            const double cal = 1e-05 * 1e-05 / 50.0;
            v = 10.0 * std::log10(v * cal * 300000.0 * 1000.0);
        }
        out << sqlaser::format_double(f) << "," << sqlaser::format_double(v) << "\n";
    }
}

void write_below_line(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "# kind=freq_noise fmin=10\n";
    const double llo = std::log(f_lo), lhi = std::log(f_hi);
    for (std::size_t i = 0; i < 200; ++i) {
        const double f = std::exp(llo + (lhi - llo) * i / 199.0);
        out << sqlaser::format_double(f) << ",0.001\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: psd_fixture_gen <output-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    try {
        // white-noise oracle: Gamma = pi*h0 with h0 = 1e4 Hz^2/Hz
        write_trace(dir + "/white_h0_1e4.csv", std::numbers::pi * 1.0e4, 10000, false);
        write_trace(dir + "/white_h0_1e4_dbm.csv", std::numbers::pi * 1.0e4, 10000, true);
        // measured-linewidth regression anchors, one per squeezing setting
        const std::vector<std::pair<std::string, double>> anchors = {
            {"r080", 30000.0}, {"r089", 27800.0}, {"r094", 23000.0},
            {"r097", 18700.0}, {"r099", 15000.0}};
        for (const auto& [tag, gamma] : anchors)
            write_trace(dir + "/" + tag + ".csv", gamma, 4000, false);
        write_below_line(dir + "/below_line.csv");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
