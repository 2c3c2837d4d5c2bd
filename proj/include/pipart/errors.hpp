#ifndef PIPART_ERRORS_HPP
#define PIPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pipart {

// Error taxonomy mirrors the CLI exit codes: usage/format problems exit 2,
// applicability/resource problems exit 3.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct ApplicabilityError : std::runtime_error {
    explicit ApplicabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant (e.g. a solver emitted a partition that fails
// its own validity check). Never expected to surface.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pipart

#endif
