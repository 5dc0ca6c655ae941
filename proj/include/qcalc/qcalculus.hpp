#pragma once

#include <functional>
#include <optional>

#include "qcalc/qparam.hpp"
#include "qcalc/report.hpp"
#include "qcalc/types.hpp"

namespace qcalc {

// A black-box evaluable function for the q-calculus operators. eval must be
// deterministic and reentrant on its declared domain.
struct Evaluable {
    std::function<Complex(Complex)> eval;
    std::optional<double> domain_radius;

    Complex operator()(Complex x) const { return eval(x); }
};

// Jackson q-derivative D_q f(x) = (f(x) - f(qx)) / ((1-q)x). Exact two-point
// formula, no truncation. x = 0 is a DomainError: the formula is 0/0 there,
// and silently substituting f'(0) would mask caller bugs.
Complex jackson_derivative(const Evaluable& f, Complex x, const QParam& q);

// Jackson q-integral over [0, x], x >= 0 real:
//   (1-q) sum_k f(q^k x) q^k x,
// stopping once the summand magnitude stays below cfg.tail_tol for 3
// consecutive points; error_estimate is the geometric tail bound from the
// last summand.
ValueWithError jackson_integral(const Evaluable& f, double x, const QParam& q,
                                const QuadratureConfig& cfg);

// Residual of the (corrected) fundamental theorem:
//   integral_0^x D_q f(t) d_q t - (f(x) - f(0)).
// The telescoping point sum converges to f(x) - f(0+), which equals the bare
// f(x) only when f(0) = 0.
ValueWithError fundamental_theorem_check(const Evaluable& f, double x, const QParam& q,
                                         const QuadratureConfig& cfg);

// Residual of D_q(fg)(x) - [f(x) D_q g(x) + g(qx) D_q f(x)]; exact in exact
// arithmetic.
Complex product_rule_residual(const Evaluable& f, const Evaluable& g, Complex x, const QParam& q);

// Residual of D_q(f/g)(x) - [D_q f(x) g(qx) - f(qx) D_q g(x)] / (g(x) g(qx)).
// PoleError when |g(x)| or |g(qx)| < pole_tol.
Complex quotient_rule_residual(const Evaluable& f, const Evaluable& g, Complex x, const QParam& q,
                               double pole_tol = 1e-8);

// Residual of integration by parts with the boundary term at 0 included:
//   integral_0^x f D_q g - [f(x)g(x) - f(0)g(0) - integral_0^x g(q t) D_q f].
Complex integration_by_parts_residual(const Evaluable& f, const Evaluable& g, double x,
                                      const QParam& q, const QuadratureConfig& cfg);

// Residual report for the q-trigonometric derivative/antiderivative family at
// one x: D_q sin_q = cos_q, D_q cos_q = -sin_q, D_q tan_q = 1 + tan_q x tan_q(qx),
// integral of sin_q = 1 - cos_q x, integral of cos_q = sin_q x, and the tan_q
// integral form. At x = 0 only the three integral identities are evaluated
// (D_q is undefined at 0).
IdentityReport qtrig_derivative_suite(Complex x, const QParam& q, const EvalConfig& cfg);

} // namespace qcalc
