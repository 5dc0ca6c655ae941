#pragma once

#include <vector>

#include "qcalc/qparam.hpp"
#include "qcalc/qpolynomial.hpp"
#include "qcalc/types.hpp"

namespace qcalc {

// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^(n-1); exactly 0 for n = 0.
double q_integer(int n, const QParam& q);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; 1 for n = 0.
double q_factorial(int n, const QParam& q);

// (a:q)_k = (1-a)(1-aq)...(1-aq^(k-1)); 1 for k = 0.
Complex q_shifted_factorial(Complex a, const QParam& q, int k);

// (a:q)_inf as a truncated product, stopping once |a q^k| < cfg.abs_tol for
// the remaining factors. error_estimate is a geometric bound on the dropped
// factors' deviation from 1. Throws NonConvergentError at cfg.max_terms.
ValueWithError q_pochhammer_infinite(Complex a, const QParam& q, const EvalConfig& cfg);

// Gaussian binomial coefficient (n k)_q as an exact integer polynomial,
// built from the Pascal-type recurrence
//   (n k)_q = q^k (n-1 k)_q + (n-1 k-1)_q.
// Throws IndexError unless 0 <= k <= n.
QPolynomial q_binomial_poly(int n, int k);

// Full row [(n 0)_q, ..., (n n)_q] of exact polynomials. Rows up to a small
// n are memoized (thread-safe); larger rows are rolled forward on demand.
std::vector<QPolynomial> q_binomial_row(int n);

// (x k)_q for real upper index x via the q^x product form:
//   prod_{j=0}^{k-1} (1 - q^(x-j)) / ([k]_q! (1-q)^k).
// For integer x >= k this agrees with q_binomial_poly(x,k) evaluated at q.
double q_binomial_numeric(double x, int k, const QParam& q);

// Rows of Gaussian binomial *values* at a fixed q, generated incrementally by
// the same Pascal recurrence carried on doubles (all quantities nonnegative,
// so the roundoff stays ~n*eps relative). Used by the power expansions below
// where exact-polynomial rows would be too costly.
class GaussianRowValues {
public:
    explicit GaussianRowValues(const QParam& q);

    // Values (n k)_q, k = 0..n. Advances and caches rows as needed.
    const std::vector<double>& row(int n);

private:
    double q_;
    std::vector<std::vector<double>> rows_;
};

// n-th power of the q-sum x (+)_q y:
//   (x (+)_q y)^n = sum_k (n k)_q x^k y^(n-k).
Complex q_add_power(Complex x, Complex y, int n, const QParam& q);

// n-th power of the q-difference x (-)_q y:
//   (x (-)_q y)^n = sum_k (n k)_q (-1)^(n-k) x^k y^(n-k) = (x (+)_q (-y))^n.
Complex q_sub_power(Complex x, Complex y, int n, const QParam& q);

// Incremental generator of (x (+)_q y)^n for n = 0,1,2,... sharing one set of
// binomial-value rows; O(n) amortized per degree.
class QSumPowers {
public:
    QSumPowers(Complex x, Complex y, const QParam& q);

    Complex power(int n);

private:
    void advance_to(int n);

    Complex x_, y_;
    GaussianRowValues rows_;
    std::vector<Complex> x_powers_, y_powers_, powers_;
};

} // namespace qcalc
