#include "qcalc/series.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qcalc {

namespace {

constexpr int kDivergenceMinDegree = 10;

// Shared summation loop; term_at(n) must yield a_n * (n-th power of the
// argument).
ValueWithError sum_terms(const std::function<Complex(int)>& term_at, const EvalConfig& cfg) {
    Complex sum = 0.0;
    int small_run = 0;
    int ring = 0;
    const int tail = cfg.tail_run;
    std::vector<double> ringbuf(static_cast<std::size_t>(tail), 0.0); // last tail_run magnitudes

    double prev_mag = -1.0;
    int growth_run = 0;

    for (int n = 0; n < cfg.max_terms; ++n) {
        const Complex term = term_at(n);
        if (!is_finite(term)) {
            throw NonConvergentError("series: term overflow at degree " + std::to_string(n));
        }
        sum += term;
        const double mag = std::abs(term);

        const double threshold = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum));
        if (mag < threshold) {
            ringbuf[static_cast<std::size_t>(ring)] = mag;
            ring = (ring + 1) % tail;
            ++small_run;
            if (small_run >= tail) {
                double err = 0.0;
                for (double m : ringbuf) {
                    err += m;
                }
                return {sum, err, n + 1};
            }
        } else {
            small_run = 0;
        }

        // Sustained pairwise growth past degree 10 signals divergence; the
        // growth run resets on any non-growing step, so zero-interleaved
        // series (sin_q, cos_q) never accumulate one.
        if (n > kDivergenceMinDegree && prev_mag >= 0.0) {
            if (mag > 0.0 && mag >= cfg.divergence_growth * prev_mag) {
                ++growth_run;
                if (growth_run >= tail) {
                    throw DivergentError("series: terms growing past degree " + std::to_string(n));
                }
            } else {
                growth_run = 0;
            }
        }
        prev_mag = mag;
    }
    throw NonConvergentError("series: max_terms reached before tail tolerance");
}

} // namespace

ValueWithError evaluate(const SeriesSpec& series, Complex z, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "evaluate");
    if (series.radius_hint) {
        const double guard = 0.95 * *series.radius_hint;
        if (std::abs(z) >= guard) {
            throw DomainError("evaluate: |z| >= 0.95 * radius_hint");
        }
    }
    Complex zp = 1.0; // z^n, exact 1 at n = 0
    bool first = true;
    return sum_terms(
        [&](int n) {
            if (!first) {
                zp *= z;
            }
            first = false;
            return series.coefficient_at(n) * zp;
        },
        cfg);
}

ValueWithError evaluate_with_powers(const SeriesSpec& series,
                                    const std::function<Complex(int)>& power_at,
                                    const EvalConfig& cfg) {
    cfg.validate();
    return sum_terms([&](int n) { return series.coefficient_at(n) * power_at(n); }, cfg);
}

} // namespace qcalc
