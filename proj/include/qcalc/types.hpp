#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "qcalc/errors.hpp"

namespace qcalc {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// API-boundary check: NaN/inf arguments are rejected up front.
inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

// Tolerances and caps for series / infinite-product evaluation.
//
// Stopping requires tail_run consecutive terms below the tolerance because
// the q-trigonometric series have zero coefficients at every other degree,
// so a single small term is not a safe stop signal. Divergence is declared
// on tail_run consecutive pairwise term growths by a factor >= divergence_growth,
// counted only past degree 10: q-series terms are legitimately non-monotone at
// small degree. A series whose growth transient outlasts degree 10 (e_q close
// to its radius at q near 1) can trip this guard; raise divergence_growth to
// relax it.
struct EvalConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_terms = 512;
    int tail_run = 3;
    double divergence_growth = 1.0; // >= 1
    double pole_tol = 1e-8;         // quotient-function denominator guard

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(pole_tol > 0.0)) {
            throw DomainError("EvalConfig: tolerances must be positive");
        }
        if (tail_run < 1 || max_terms < tail_run) {
            throw DomainError("EvalConfig: require max_terms >= tail_run >= 1");
        }
        if (!(divergence_growth >= 1.0)) {
            throw DomainError("EvalConfig: divergence_growth must be >= 1");
        }
    }
};

// Tolerances and caps for the Jackson q-integral point sum.
struct QuadratureConfig {
    double tail_tol = 1e-14;
    int max_points = 2048;

    void validate() const {
        if (!(tail_tol > 0.0)) {
            throw DomainError("QuadratureConfig: tail_tol must be positive");
        }
        if (max_points < 8) {
            throw DomainError("QuadratureConfig: max_points must be >= 8");
        }
    }
};

// Evaluated value plus a truncation-error estimate. When convergence was
// declared, error_estimate is at least the magnitude of the last included term.
struct ValueWithError {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    int terms_used = 0;
};

} // namespace qcalc
