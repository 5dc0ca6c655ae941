#include "qcalc/qfunctions.hpp"

#include <cmath>
#include <memory>
#include <vector>

namespace qcalc {

namespace {

// Incrementally cached 1/[n]_q! values.
class InvQFactorial {
public:
    explicit InvQFactorial(const QParam& q) : q_(q.value()), one_minus_q_(q.one_minus()) {
        inv_.push_back(1.0);
    }

    double at(int n) {
        while (static_cast<int>(inv_.size()) <= n) {
            const int m = static_cast<int>(inv_.size());
            const double qint = one_minus_qpow(q_, m) / one_minus_q_;
            inv_.push_back(inv_.back() / qint);
        }
        return inv_[static_cast<std::size_t>(n)];
    }

private:
    double q_;
    double one_minus_q_;
    std::vector<double> inv_;
};

} // namespace

SeriesSpec eq_series_spec(const QParam& q) {
    auto fact = std::make_shared<InvQFactorial>(q);
    return {[fact](int n) { return Complex(fact->at(n)); }, q.series_radius()};
}

SeriesSpec Eq_series_spec(const QParam& q) {
    // Coefficient recurrence: c_n = c_(n-1) * q^(n-1) / [n]_q.
    struct State {
        explicit State(const QParam& p) : fact(p) {}
        InvQFactorial fact;
        std::vector<double> qtri{1.0}; // q^(n(n-1)/2)
        double q = 0.0;
    };
    auto st = std::make_shared<State>(q);
    st->q = q.value();
    return {[st](int n) {
                while (static_cast<int>(st->qtri.size()) <= n) {
                    const int m = static_cast<int>(st->qtri.size());
                    st->qtri.push_back(st->qtri.back() * std::pow(st->q, m - 1));
                }
                return Complex(st->qtri[static_cast<std::size_t>(n)] * st->fact.at(n));
            },
            std::nullopt};
}

SeriesSpec sin_q_series_spec(const QParam& q) {
    auto fact = std::make_shared<InvQFactorial>(q);
    return {[fact](int n) {
                if (n % 2 == 0) {
                    return Complex(0.0);
                }
                const int m = (n - 1) / 2;
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                return Complex(sign * fact->at(n));
            },
            q.series_radius()};
}

SeriesSpec cos_q_series_spec(const QParam& q) {
    auto fact = std::make_shared<InvQFactorial>(q);
    return {[fact](int n) {
                if (n % 2 != 0) {
                    return Complex(0.0);
                }
                const int m = n / 2;
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                return Complex(sign * fact->at(n));
            },
            q.series_radius()};
}

ValueWithError eq_series(Complex z, const QParam& q, const EvalConfig& cfg) {
    return evaluate(eq_series_spec(q), z, cfg);
}

ValueWithError eq_product(Complex z, const QParam& q, const EvalConfig& cfg) {
    cfg.validate();
    require_finite(z, "eq_product");
    Complex prod = 1.0;
    Complex c = z * q.one_minus(); // a q^k
    for (int k = 0; k < cfg.max_terms; ++k) {
        if (std::abs(c) < cfg.abs_tol) {
            const double perr = std::abs(prod) * std::abs(c) / q.one_minus();
            const double pmag = std::abs(prod);
            return {1.0 / prod, perr / (pmag * pmag), k};
        }
        const Complex factor = 1.0 - c;
        if (std::abs(factor) < cfg.abs_tol) {
            throw PoleError("eq_product: factor vanishes (pole of e_q)");
        }
        prod *= factor;
        c *= q.value();
    }
    throw NonConvergentError("eq_product: factor cap reached before tail tolerance");
}

ValueWithError Eq_series(Complex z, const QParam& q, const EvalConfig& cfg) {
    // E_q is entire; its terms may legitimately grow well past degree 10
    // before the q^(n(n-1)/2) factor takes over, so the growth trigger is
    // disabled here. An undersized max_terms still surfaces as NonConvergent.
    EvalConfig relaxed = cfg;
    relaxed.divergence_growth = 1e300;
    return evaluate(Eq_series_spec(q), z, relaxed);
}

ValueWithError Eq_product(Complex z, const QParam& q, const EvalConfig& cfg) {
    return q_pochhammer_infinite(-z * q.one_minus(), q, cfg);
}

ValueWithError sin_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return evaluate(sin_q_series_spec(q), x, cfg);
}

ValueWithError cos_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return evaluate(cos_q_series_spec(q), x, cfg);
}

namespace {

ValueWithError quotient(const ValueWithError& num, const ValueWithError& den, double pole_tol,
                        const char* what) {
    const double dmag = std::abs(den.value);
    if (dmag < pole_tol) {
        throw PoleError(std::string(what) + ": denominator within pole tolerance of zero");
    }
    const Complex v = num.value / den.value;
    const double err = (num.error_estimate + std::abs(v) * den.error_estimate) / dmag;
    return {v, err, std::max(num.terms_used, den.terms_used)};
}

constexpr ValueWithError kExactOne{Complex(1.0), 0.0, 0};

} // namespace

ValueWithError tan_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return quotient(sin_q(x, q, cfg), cos_q(x, q, cfg), cfg.pole_tol, "tan_q");
}

ValueWithError sec_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return quotient(kExactOne, cos_q(x, q, cfg), cfg.pole_tol, "sec_q");
}

ValueWithError csc_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return quotient(kExactOne, sin_q(x, q, cfg), cfg.pole_tol, "csc_q");
}

ValueWithError cot_q(Complex x, const QParam& q, const EvalConfig& cfg) {
    return quotient(cos_q(x, q, cfg), sin_q(x, q, cfg), cfg.pole_tol, "cot_q");
}

ValueWithError daehee_constant(const QParam& q, const EvalConfig& cfg) {
    SeriesSpec spec = eq_series_spec(q);
    spec.radius_hint.reset(); // z = 1 is strictly inside the radius for all q
    return evaluate(spec, Complex(1.0), cfg);
}

DaeheeSequenceTerm daehee_sequence_term(int n, const QParam& q) {
    if (n < 1) {
        throw DomainError("daehee_sequence_term: n must be >= 1");
    }
    const auto row = q_binomial_row(n);
    const double t = 1.0 / q_integer(n, q);
    double sum = 0.0;
    double tk = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += row[static_cast<std::size_t>(k)].evaluate(q.value()) * tk;
        tk *= t;
    }
    return {n, sum};
}

ValueWithError QFunctionHandle::evaluate(Complex x, const EvalConfig& cfg) const {
    switch (kind_) {
    case QFunctionKind::EqLower:
        return eq_series(x, q_, cfg);
    case QFunctionKind::EqUpper:
        return Eq_series(x, q_, cfg);
    case QFunctionKind::Sin:
        return sin_q(x, q_, cfg);
    case QFunctionKind::Cos:
        return cos_q(x, q_, cfg);
    case QFunctionKind::Tan:
        return tan_q(x, q_, cfg);
    case QFunctionKind::Sec:
        return sec_q(x, q_, cfg);
    case QFunctionKind::Csc:
        return csc_q(x, q_, cfg);
    case QFunctionKind::Cot:
        return cot_q(x, q_, cfg);
    }
    throw DomainError("QFunctionHandle: unknown kind");
}

namespace {

SeriesSpec spec_for_composed(QFunctionKind kind, const QParam& q, const char* what) {
    switch (kind) {
    case QFunctionKind::EqLower:
        return eq_series_spec(q);
    case QFunctionKind::Sin:
        return sin_q_series_spec(q);
    case QFunctionKind::Cos:
        return cos_q_series_spec(q);
    default:
        throw DomainError(std::string(what) + ": kind must be e_q, sin_q or cos_q");
    }
}

} // namespace

ValueWithError fn_at_qsum(QFunctionKind kind, Complex x, Complex y, const QParam& q,
                          const EvalConfig& cfg) {
    cfg.validate();
    require_finite(x, "fn_at_qsum");
    require_finite(y, "fn_at_qsum");
    if (std::abs(x) + std::abs(y) >= 0.95 * q.series_radius()) {
        throw DomainError("fn_at_qsum: |x| + |y| >= 0.95/(1-q)");
    }
    SeriesSpec spec = spec_for_composed(kind, q, "fn_at_qsum");
    spec.radius_hint.reset();
    auto powers = std::make_shared<QSumPowers>(x, y, q);
    return evaluate_with_powers(spec, [powers](int n) { return powers->power(n); }, cfg);
}

ValueWithError fn_at_scaled_qdiff(QFunctionKind kind, Complex x, const QParam& q, QSumSign sign,
                                  const EvalConfig& cfg) {
    cfg.validate();
    require_finite(x, "fn_at_scaled_qdiff");
    if (kind != QFunctionKind::Sin && kind != QFunctionKind::Cos) {
        throw DomainError("fn_at_scaled_qdiff: kind must be sin_q or cos_q");
    }

    // (1 (+/-)_q 1)^n for n = 0..max_terms, precomputed once per call.
    auto v = std::make_shared<std::vector<double>>();
    v->reserve(static_cast<std::size_t>(cfg.max_terms));
    if (sign == QSumSign::Sub) {
        // 0 at odd n; (1-q)(1-q^3)...(1-q^(n-1)) at even n.
        double even_prod = 1.0;
        for (int n = 0; n < cfg.max_terms; ++n) {
            if (n == 0) {
                v->push_back(1.0);
            } else if (n % 2 == 1) {
                v->push_back(0.0);
            } else {
                even_prod *= one_minus_qpow(q.value(), n - 1);
                v->push_back(even_prod);
            }
        }
    } else {
        GaussianRowValues rows(q);
        for (int n = 0; n < cfg.max_terms; ++n) {
            const auto& row = rows.row(n);
            double sum = 0.0;
            for (double b : row) {
                sum += b;
            }
            v->push_back(sum);
        }
    }

    double scale = 0.0; // max_n |v_n|^(1/n)
    for (int n = 1; n < static_cast<int>(v->size()); ++n) {
        const double vn = (*v)[static_cast<std::size_t>(n)];
        if (vn > 0.0) {
            scale = std::max(scale, std::pow(vn, 1.0 / n));
        }
    }
    if (std::abs(x) * scale >= 0.95 * q.series_radius()) {
        throw DomainError("fn_at_scaled_qdiff: |x| * scale >= 0.95/(1-q)");
    }

    SeriesSpec spec = spec_for_composed(kind, q, "fn_at_scaled_qdiff");
    spec.radius_hint.reset();
    auto xpow = std::make_shared<std::vector<Complex>>(1, Complex(1.0));
    return evaluate_with_powers(
        spec,
        [v, xpow, x](int n) {
            while (static_cast<int>(xpow->size()) <= n) {
                xpow->push_back(xpow->back() * x);
            }
            return (*xpow)[static_cast<std::size_t>(n)] * (*v)[static_cast<std::size_t>(n)];
        },
        cfg);
}

} // namespace qcalc
