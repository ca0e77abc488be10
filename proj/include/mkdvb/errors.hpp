#ifndef MKDVB_ERRORS_HPP
#define MKDVB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mkdvb {

// Bad argument ranges (L <= 0, odd N, sigma outside the diagnostic range, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Corrupt payloads: NaN/Inf samples, grossly asymmetric spectra.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A time step produced a non-finite or runaway field.
struct BlowUpError : std::runtime_error {
    BlowUpError(const std::string& what, double t) : std::runtime_error(what), time(t) {}
    double time;
};

// Missing or inconsistent diagnostic inputs (too few snapshots, absent samples).
struct DiagnosticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mkdvb

#endif
