#pragma once

#include <functional>
#include <optional>

#include "qcalc/types.hpp"

namespace qcalc {

// A power series sum a_n z^n described by its coefficient rule. The rule must
// be defined for every n >= 0, return finite values, and be reentrant (it may
// be invoked concurrently when the series is shared across threads).
struct SeriesSpec {
    std::function<Complex(int)> coefficient_at;
    std::optional<double> radius_hint; // convergence radius, when known
};

// Truncated evaluation of sum a_n z^n. Stops at the first N whose trailing
// cfg.tail_run terms all satisfy |term| < max(abs_tol, rel_tol * |partial sum|);
// error_estimate is the sum of those tail_run term magnitudes.
//
// Throws DomainError when |z| >= 0.95 * radius_hint (boundary behavior is out
// of scope), DivergentError on sustained term growth past degree 10, and
// NonConvergentError when max_terms is exhausted.
ValueWithError evaluate(const SeriesSpec& series, Complex z, const EvalConfig& cfg);

// Same stopping rule with z^n replaced by power_at(n) — used to evaluate a
// series at a formal q-sum, where the n-th "power" of the argument is its
// q-expansion rather than an ordinary power.
ValueWithError evaluate_with_powers(const SeriesSpec& series,
                                    const std::function<Complex(int)>& power_at,
                                    const EvalConfig& cfg);

} // namespace qcalc
