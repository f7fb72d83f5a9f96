#include "sqlaser/linewidth.hpp"

#include <charconv>
#include <sstream>

namespace sqlaser {

namespace {

double parse_number(const std::string& tok, long line_no) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || p != last)
        throw parse_error("invalid number '" + tok + "'", line_no);
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

PsdTrace ingest_trace(std::istream& in) {
    PsdTrace trace;
    bool kind_set = false;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            // metadata: any number of key=value pairs on the line
            std::istringstream meta(t.substr(1));
            std::string word;
            while (meta >> word) {
                const auto eq = word.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = word.substr(0, eq);
                const std::string val = word.substr(eq + 1);
                if (key == "kind") {
                    if (val == "freq_noise") trace.value_kind = PsdKind::freq_noise;
                    else if (val == "dbm_raw") trace.value_kind = PsdKind::dbm_raw;
                    else throw parse_error("unknown trace kind '" + val + "'", line_no);
                    kind_set = true;
                } else if (key == "rbw") {
                    trace.rbw_hz = parse_number(val, line_no);
                } else if (key == "k0") {
                    trace.slope_k0 = parse_number(val, line_no);
                } else if (key == "z0") {
                    trace.z0_ohm = parse_number(val, line_no);
                } else if (key == "fmin") {
                    trace.f_min = parse_number(val, line_no);
                }
            }
            continue;
        }
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw parse_error("expected 'frequency_hz,value'", line_no);
        PsdSample s;
        s.f_hz = parse_number(trim(t.substr(0, comma)), line_no);
        s.value = parse_number(trim(t.substr(comma + 1)), line_no);
        if (!(s.f_hz > 0.0))
            throw parse_error("frequencies must be positive", line_no);
        if (!trace.samples.empty() && s.f_hz <= trace.samples.back().f_hz)
            throw parse_error("frequencies must be strictly increasing", line_no);
        trace.samples.push_back(s);
    }
    if (!kind_set) throw parse_error("missing 'kind' metadata");
    if (trace.value_kind == PsdKind::dbm_raw && (!trace.rbw_hz || !trace.slope_k0))
        throw parse_error("dbm_raw trace requires rbw and k0 metadata");
    return trace;
}

} // namespace sqlaser
