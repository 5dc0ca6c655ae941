#pragma once

#include "qcalc/qcore.hpp"
#include "qcalc/qparam.hpp"
#include "qcalc/series.hpp"
#include "qcalc/types.hpp"

namespace qcalc {

// e_q(z) = sum z^n / [n]_q!  (series form; radius 1/(1-q), guarded at 95%).
ValueWithError eq_series(Complex z, const QParam& q, const EvalConfig& cfg);

// e_q(z) = 1 / (z(1-q):q)_inf  (product form; valid beyond the series radius,
// poles at z = q^(-k)/(1-q)). Throws PoleError near a vanishing factor.
ValueWithError eq_product(Complex z, const QParam& q, const EvalConfig& cfg);

// E_q(z) = sum q^(n(n-1)/2) z^n / [n]_q!  (entire).
ValueWithError Eq_series(Complex z, const QParam& q, const EvalConfig& cfg);

// E_q(z) = (-z(1-q):q)_inf, exposed for cross-checking the series form.
ValueWithError Eq_product(Complex z, const QParam& q, const EvalConfig& cfg);

// sin_q x = sum (-1)^n x^(2n+1) / [2n+1]_q!,  cos_q x = sum (-1)^n x^(2n) / [2n]_q!.
ValueWithError sin_q(Complex x, const QParam& q, const EvalConfig& cfg);
ValueWithError cos_q(Complex x, const QParam& q, const EvalConfig& cfg);

// Quotient extensions. PoleError when the denominator magnitude drops below
// cfg.pole_tol: a huge value would only amplify noise in downstream identity
// checks.
ValueWithError tan_q(Complex x, const QParam& q, const EvalConfig& cfg); // sin_q/cos_q
ValueWithError sec_q(Complex x, const QParam& q, const EvalConfig& cfg); // 1/cos_q
ValueWithError csc_q(Complex x, const QParam& q, const EvalConfig& cfg); // 1/sin_q
ValueWithError cot_q(Complex x, const QParam& q, const EvalConfig& cfg); // cos_q/sin_q

// The Daehee constant e_q = e_q(1) = sum 1/[k]_q!. z = 1 is strictly inside
// the series radius for every q in (0,1), so this evaluation skips the 95%
// radius guard; q very close to 0 converges slowly and may need a larger
// max_terms.
ValueWithError daehee_constant(const QParam& q, const EvalConfig& cfg);

// One term of the sequence (1 (+)_q 1/[n]_q)^n whose limit is the Daehee
// constant. Uses exact-polynomial binomials evaluated at q (n is an integer,
// and this avoids cancellation for large n).
struct DaeheeSequenceTerm {
    int n;
    double value;
};
DaeheeSequenceTerm daehee_sequence_term(int n, const QParam& q);

enum class QFunctionKind { EqLower, EqUpper, Sin, Cos, Tan, Sec, Csc, Cot };

// A fixed (function, q) pair; every evaluation of a handle uses its q.
class QFunctionHandle {
public:
    QFunctionHandle(QFunctionKind kind, QParam q) : kind_(kind), q_(q) {}

    QFunctionKind kind() const { return kind_; }
    const QParam& q() const { return q_; }

    ValueWithError evaluate(Complex x, const EvalConfig& cfg) const;

private:
    QFunctionKind kind_;
    QParam q_;
};

// Evaluate e_q, sin_q or cos_q at the formal q-sum x (+)_q y: the series is
// summed with (x (+)_q y)^n substituted for the n-th power. Requires
// |x| + |y| < 0.95/(1-q), a sufficient convergence condition since Gaussian
// binomials at q in (0,1) are dominated by classical ones.
ValueWithError fn_at_qsum(QFunctionKind kind, Complex x, Complex y, const QParam& q,
                          const EvalConfig& cfg);

enum class QSumSign { Add, Sub };

// Evaluate sin_q or cos_q at x(1 (+/-)_q 1): the n-th power of the argument is
// x^n (1 (+/-)_q 1)^n. The (1 (-)_q 1)^n values are 0 for odd n and the running
// product (1-q)(1-q^3)...(1-q^(n-1)) for even n; (1 (+)_q 1)^n is the Gaussian
// row sum. Domain guard scales 0.95/(1-q) by max_n |(1 (+/-)_q 1)^n|^(1/n).
ValueWithError fn_at_scaled_qdiff(QFunctionKind kind, Complex x, const QParam& q, QSumSign sign,
                                  const EvalConfig& cfg);

// Series descriptions of e_q, E_q, sin_q, cos_q at a given q (coefficient
// rules carry their own incremental caches; each call gets fresh state).
SeriesSpec eq_series_spec(const QParam& q);
SeriesSpec Eq_series_spec(const QParam& q);
SeriesSpec sin_q_series_spec(const QParam& q);
SeriesSpec cos_q_series_spec(const QParam& q);

} // namespace qcalc
