#include "qcalc/qcalculus.hpp"

#include <cmath>
#include <string>

#include "qcalc/qfunctions.hpp"

namespace qcalc {

Complex jackson_derivative(const Evaluable& f, Complex x, const QParam& q) {
    require_finite(x, "jackson_derivative");
    if (x == Complex(0.0)) {
        throw DomainError("jackson_derivative: undefined at x = 0");
    }
    return (f(x) - f(q.value() * x)) / (q.one_minus() * x);
}

ValueWithError jackson_integral(const Evaluable& f, double x, const QParam& q,
                                const QuadratureConfig& cfg) {
    cfg.validate();
    require_finite(x, "jackson_integral");
    if (x < 0.0) {
        throw DomainError("jackson_integral: x must be >= 0");
    }
    if (x == 0.0) {
        return {Complex(0.0), 0.0, 0};
    }
    const double one_minus_q = q.one_minus();
    Complex sum = 0.0;
    double point = x; // q^k x
    double last_mag = 0.0;
    int small_run = 0;
    for (int k = 0; k < cfg.max_points; ++k) {
        const Complex summand = one_minus_q * f(Complex(point)) * point;
        sum += summand;
        last_mag = std::abs(summand);
        if (last_mag < cfg.tail_tol) {
            if (++small_run >= 3) {
                // Remaining summands shrink at least geometrically in q^k x.
                const double tail = last_mag * q.value() / one_minus_q;
                return {sum, tail, k + 1};
            }
        } else {
            small_run = 0;
        }
        point *= q.value();
    }
    throw NonConvergentError("jackson_integral: max_points reached before tail tolerance");
}

ValueWithError fundamental_theorem_check(const Evaluable& f, double x, const QParam& q,
                                         const QuadratureConfig& cfg) {
    Evaluable dqf{[&f, &q](Complex t) { return jackson_derivative(f, t, q); }, f.domain_radius};
    const ValueWithError integral = jackson_integral(dqf, x, q, cfg);
    const Complex residual = integral.value - (f(Complex(x)) - f(Complex(0.0)));
    return {residual, integral.error_estimate, integral.terms_used};
}

Complex product_rule_residual(const Evaluable& f, const Evaluable& g, Complex x, const QParam& q) {
    Evaluable fg{[&f, &g](Complex t) { return f(t) * g(t); }, std::nullopt};
    const Complex lhs = jackson_derivative(fg, x, q);
    const Complex rhs =
        f(x) * jackson_derivative(g, x, q) + g(q.value() * x) * jackson_derivative(f, x, q);
    return lhs - rhs;
}

Complex quotient_rule_residual(const Evaluable& f, const Evaluable& g, Complex x, const QParam& q,
                               double pole_tol) {
    const Complex gx = g(x);
    const Complex gqx = g(q.value() * x);
    if (std::abs(gx) < pole_tol || std::abs(gqx) < pole_tol) {
        throw PoleError("quotient_rule_residual: denominator within pole tolerance of zero");
    }
    Evaluable ratio{[&f, &g](Complex t) { return f(t) / g(t); }, std::nullopt};
    const Complex lhs = jackson_derivative(ratio, x, q);
    const Complex rhs =
        (jackson_derivative(f, x, q) * gqx - f(q.value() * x) * jackson_derivative(g, x, q)) /
        (gx * gqx);
    return lhs - rhs;
}

Complex integration_by_parts_residual(const Evaluable& f, const Evaluable& g, double x,
                                      const QParam& q, const QuadratureConfig& cfg) {
    Evaluable f_dqg{[&f, &g, &q](Complex t) { return f(t) * jackson_derivative(g, t, q); },
                    std::nullopt};
    Evaluable gq_dqf{[&f, &g, &q](Complex t) {
                         return g(q.value() * t) * jackson_derivative(f, t, q);
                     },
                     std::nullopt};
    const ValueWithError lhs = jackson_integral(f_dqg, x, q, cfg);
    const ValueWithError rhs_int = jackson_integral(gq_dqf, x, q, cfg);
    const Complex boundary =
        f(Complex(x)) * g(Complex(x)) - f(Complex(0.0)) * g(Complex(0.0));
    return lhs.value - (boundary - rhs_int.value);
}

IdentityReport qtrig_derivative_suite(Complex x, const QParam& q, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(x, "qtrig_derivative_suite");
    QuadratureConfig quad;
    quad.tail_tol = cfg.abs_tol;
    quad.max_points = 4 * cfg.max_terms;

    Evaluable sinq{[&q, &cfg](Complex t) { return sin_q(t, q, cfg).value; }, q.series_radius()};
    Evaluable cosq{[&q, &cfg](Complex t) { return cos_q(t, q, cfg).value; }, q.series_radius()};
    auto tanq = [&q, &cfg](Complex t) { return tan_q(t, q, cfg).value; };

    IdentityReport report;
    report.identity_id = "qtrig_derivative_suite";
    report.q = q.value();
    report.tolerance = 1e-8;
    report.argmax_input = {x};

    auto record = [&report](double residual) {
        ++report.samples;
        if (residual > report.max_abs_residual) {
            report.max_abs_residual = residual;
        }
    };

    const double xr = x.real();
    if (x != Complex(0.0)) {
        record(std::abs(jackson_derivative(sinq, x, q) - cosq(x)));
        record(std::abs(jackson_derivative(cosq, x, q) + sinq(x)));
        Evaluable tn{tanq, std::nullopt};
        record(std::abs(jackson_derivative(tn, x, q) -
                        (1.0 + tanq(x) * tanq(q.value() * x))));
    }
    // Antiderivative identities need a real, nonnegative endpoint.
    if (x.imag() == 0.0 && xr >= 0.0) {
        record(std::abs(jackson_integral(sinq, xr, q, quad).value -
                        (1.0 - cosq(Complex(xr)))));
        record(std::abs(jackson_integral(cosq, xr, q, quad).value - sinq(Complex(xr))));
        Evaluable tan_form{[&tanq, &q](Complex t) {
                               return 1.0 + tanq(t) * tanq(q.value() * t);
                           },
                           std::nullopt};
        record(std::abs(jackson_integral(tan_form, xr, q, quad).value - tanq(Complex(xr))));
    }
    report.pass = report.samples > 0 && report.max_abs_residual <= report.tolerance;
    return report;
}

} // namespace qcalc
