#pragma once

#include <stdexcept>
#include <string>

namespace zolo {

// Error taxonomy. Everything derives from zolo::error so callers can catch
// broadly; the CLI maps any zolo::error to exit code 2.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Scalar argument outside the mathematical domain of an operation.
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// Invalid interval pair (overlap, touching endpoints, degenerate, wrong order).
struct geometry_error : error {
    explicit geometry_error(const std::string& what) : error(what) {}
};

// Operation not supported for the requested matrix class.
struct capability_error : error {
    explicit capability_error(const std::string& what) : error(what) {}
};

// Invalid measure (negative weights, non-positive-definite moments, ...).
struct measure_error : error {
    explicit measure_error(const std::string& what) : error(what) {}
};

// Bad numerical data (non-finite entries, dimension mismatch, bad file).
struct data_error : error {
    explicit data_error(const std::string& what) : error(what) {}
};

} // namespace zolo
