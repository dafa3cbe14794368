#pragma once

#include <stdexcept>

namespace lelat {

// Error taxonomy; every throw site uses the most specific type so callers
// (and the CLI) can map failures to distinct diagnostics.

struct invalid_size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct missing_edge_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct containment_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_spectrum_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct division_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested (family, boundary) has no closed-form spectrum; use the numeric path.
struct no_closed_form_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Problem exceeds a configured resource limit (e.g. dense eigensolver cap).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lelat
