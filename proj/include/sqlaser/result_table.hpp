#pragma once

// Deterministic result emission.  Data files carry no timestamps; the
// provenance block holds the descriptor content hash, toolkit version and
// evaluation mode.  Floats are printed with shortest round-trip decimals.

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace sqlaser {

inline constexpr const char* toolkit_version = "0.1.0";

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::string> units; // same arity as columns
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> provenance;

    void add_row(std::vector<double> row);
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

void write_csv(const ResultTable& t, std::ostream& out);
void write_json(const ResultTable& t, std::ostream& out);

} // namespace sqlaser
