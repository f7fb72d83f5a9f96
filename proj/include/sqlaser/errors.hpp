#pragma once

#include <stdexcept>
#include <string>

namespace sqlaser {

/// Bad or missing configuration (descriptor fields, calibration metadata).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data; carries the 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, long line_no = 0)
        : std::runtime_error(line_no > 0 ? msg + " (line " + std::to_string(line_no) + ")" : msg),
          line(line_no) {}
    long line;
};

/// Linearized response is undefined at or above the oscillation threshold.
class threshold_singularity : public std::runtime_error {
public:
    explicit threshold_singularity(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sqlaser
