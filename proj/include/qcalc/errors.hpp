#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

// Base class for all qcalc evaluation errors.
struct QError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the operation's validity domain (bad q, series argument
// beyond the convergence guard, negative integration endpoint, ...).
struct DomainError : QError {
    using QError::QError;
};

// A quotient or infinite-product factor came within pole tolerance of zero.
struct PoleError : QError {
    using QError::QError;
};

// Term/point cap reached before the tail tolerance was met.
struct NonConvergentError : QError {
    using QError::QError;
};

// Sustained geometric growth of series terms detected.
struct DivergentError : QError {
    using QError::QError;
};

// Out-of-range combinatorial index (k > n or negative).
struct IndexError : QError {
    using QError::QError;
};

} // namespace qcalc
