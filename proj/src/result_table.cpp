#include "sqlaser/result_table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace sqlaser {

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::logic_error("result table: row arity mismatch");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void write_csv(const ResultTable& t, std::ostream& out) {
    for (const auto& [k, v] : t.provenance) out << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
        if (i < t.units.size() && !t.units[i].empty()) out << "[" << t.units[i] << "]";
    }
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
}

void write_json(const ResultTable& t, std::ostream& out) {
    nlohmann::ordered_json j;
    j["provenance"] = t.provenance;
    j["columns"] = t.columns;
    j["units"] = t.units;
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (double v : row) {
            if (std::isnan(v)) r.push_back(nullptr);
            else r.push_back(v);
        }
        rows.push_back(std::move(r));
    }
    out << j.dump(2) << "\n";
}

} // namespace sqlaser
