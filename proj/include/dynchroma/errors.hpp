#pragma once

#include <stdexcept>
#include <string>

namespace dynchroma {

// Parse failure in DIMACS / edge-list / JSON input, carrying the 1-based
// line number of the offending line (0 when no line applies).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An exact solver refused an instance larger than its cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dynchroma
