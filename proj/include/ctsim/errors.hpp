#pragma once

#include <stdexcept>
#include <string>

namespace ctsim {

/// Bad or inconsistent run configuration (scenario ids, parameter ranges, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data. Carries the 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, long line)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace ctsim
