// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Every tolerance is pinned here, in code. Residual conventions per line:
// absolute unless the line says "normalized", where the residual is divided
// by (1 + |reference value|).

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcalc/identities.hpp"
#include "qcalc/qcalculus.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/qfunctions.hpp"

#include "subprocess.hpp"

using namespace qcalc;
using testutil::golden_path;
using testutil::read_file;
using testutil::run_cli;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s — %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// 1. Gaussian binomial exactness, n <= 30, exact integer arithmetic.
void criterion_gaussian_binomials() {
    bool ok = true;
    std::vector<std::vector<BigInt>> classical(31);
    for (int n = 0; n <= 30; ++n) {
        classical[n].assign(n + 1, 1);
        for (int k = 1; k < n; ++k) {
            classical[n][k] = classical[n - 1][k - 1] + classical[n - 1][k];
        }
        const auto row = q_binomial_row(n);
        for (int k = 0; k <= n; ++k) {
            const QPolynomial& p = row[k];
            ok = ok && p.degree() == k * (n - k);
            ok = ok && p.is_palindromic();
            ok = ok && p.all_nonnegative();
            ok = ok && p.evaluate_at_one() == classical[n][k];
            ok = ok && p == row[n - k];
            if (k >= 1 && k <= n - 1) {
                ok = ok && p == q_binomial_poly(n - 1, k).shifted(k) + q_binomial_poly(n - 1, k - 1);
            }
        }
    }
    report(1, "gaussian binomial exactness (n <= 30, zero tolerance)", ok,
           ok ? "recurrence, symmetry, palindromes, q=1 values all exact" : "exactness violated");
}

// 2. Daehee formula over 1000 seeded random (x, q).
void criterion_daehee_formula() {
    EvalConfig cfg;
    identities::SweepRng rng(2026);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double q = rng.uniform(0.1, 0.9);
        const double x = rng.uniform(-0.5, 0.5) / (1.0 - q);
        worst = std::max(worst, identities::daehee_formula_residual(x, QParam(q), cfg));
    }
    report(2, "Daehee formula, 1000 random (x, q)", worst <= 1e-10,
           "max normalized residual " + fmt(worst) + " (tol 1e-10)");
}

// 3. e_q(z) E_q(-z) = 1 and series/product agreement, 200 z per q.
void criterion_exponential_pair() {
    EvalConfig cfg;
    double worst_pair = 0.0;
    double worst_gap = 0.0;
    for (double qd : {0.3, 0.6, 0.9}) {
        QParam q(qd);
        identities::SweepRng rng(301);
        const double r = 0.5 / (1.0 - qd);
        for (int i = 0; i < 200; ++i) {
            const Complex z = std::polar(r * std::sqrt(rng.uniform(0.0, 1.0)),
                                         rng.uniform(0.0, 2.0 * M_PI));
            worst_pair = std::max(worst_pair, identities::exp_pair_residual(z, q, cfg));
            worst_gap = std::max(worst_gap, identities::exp_series_product_gap(z, q, cfg));
        }
    }
    const bool ok = worst_pair <= 1e-10 && worst_gap <= 1e-10;
    report(3, "exponential pair e_q(z)E_q(-z) = 1, series vs product", ok,
           "max |eE-1| " + fmt(worst_pair) + ", max normalized gap " + fmt(worst_gap) +
               " (tol 1e-10)");
}

// 4. Addition theorems on 20x20 grids, |x|+|y| <= 0.5/(1-q).
void criterion_addition_theorems() {
    EvalConfig cfg;
    double worst = 0.0;
    for (double qd : {0.3, 0.5, 0.8}) {
        QParam q(qd);
        const double L = 0.25 / (1.0 - qd);
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const double x = -L + 2.0 * L * i / 19.0;
                const double y = -L + 2.0 * L * j / 19.0;
                for (auto kind : {identities::AdditionKind::Exp, identities::AdditionKind::Sin,
                                  identities::AdditionKind::Cos}) {
                    worst = std::max(worst, identities::addition_residual(kind, x, y, q, cfg));
                }
            }
        }
    }
    report(4, "addition theorems (q-sum args, 20x20 grids)", worst <= 1e-8,
           "max residual " + fmt(worst) + " (tol 1e-8)");
}

// 5. Pythagorean family with pole skipping bounded by 5%.
void criterion_pythagorean() {
    bool ok = true;
    double worst = 0.0;
    int max_skipped = 0;
    for (double qd : {0.3, 0.5, 0.8}) {
        identities::SweepOptions opts;
        opts.samples = 100;
        opts.seed = 505;
        const auto reports = identities::check_pythagorean(QParam(qd), opts);
        for (const auto& r : reports) {
            ok = ok && r.pass;
            worst = std::max(worst, r.max_abs_residual);
            max_skipped = std::max(max_skipped, r.skipped);
            ok = ok && r.skipped <= 5; // 5% of 100
        }
    }
    report(5, "q-Pythagorean family (100 x per q, skips <= 5%)", ok,
           "max residual " + fmt(worst) + " (tol 1e-8), max skipped " +
               std::to_string(max_skipped) + "/100");
}

// 6. Jackson derivative exactness.
void criterion_jackson_derivative() {
    EvalConfig cfg;
    double worst_mono = 0.0;
    double worst_eig = 0.0;
    double worst_trig = 0.0;
    for (double qd : {0.3, 0.5, 0.9}) {
        QParam q(qd);
        for (int n = 1; n <= 10; ++n) {
            for (double x : {0.2, 0.7, 1.3}) {
                Evaluable f{[n](Complex t) { return std::pow(t, n); }, std::nullopt};
                const double expected = q_integer(n, q) * std::pow(x, n - 1);
                worst_mono = std::max(worst_mono,
                                      std::abs(jackson_derivative(f, Complex(x), q) - expected) /
                                          std::abs(expected));
            }
        }
        for (double lambda : {0.4, 1.0, -0.6}) {
            Evaluable f{[&q, &cfg, lambda](Complex t) { return eq_series(lambda * t, q, cfg).value; },
                        std::nullopt};
            const double x = 0.3 / (1.0 - qd);
            const Complex rhs = lambda * eq_series(Complex(lambda * x), q, cfg).value;
            worst_eig = std::max(worst_eig, std::abs(jackson_derivative(f, Complex(x), q) - rhs) /
                                                (1.0 + std::abs(rhs)));
        }
        Evaluable sinq{[&q, &cfg](Complex t) { return sin_q(t, q, cfg).value; }, std::nullopt};
        Evaluable cosq{[&q, &cfg](Complex t) { return cos_q(t, q, cfg).value; }, std::nullopt};
        auto tanv = [&q, &cfg](Complex t) { return tan_q(t, q, cfg).value; };
        Evaluable tn{tanv, std::nullopt};
        for (double x : {0.5 * std::min(0.3 / (1.0 - qd), 1.0), std::min(0.3 / (1.0 - qd), 1.0)}) {
            const Complex cx(x);
            worst_trig = std::max(worst_trig,
                                  std::abs(jackson_derivative(sinq, cx, q) - cosq(cx)));
            worst_trig = std::max(worst_trig,
                                  std::abs(jackson_derivative(cosq, cx, q) + sinq(cx)));
            worst_trig = std::max(worst_trig,
                                  std::abs(jackson_derivative(tn, cx, q) -
                                           (1.0 + tanv(cx) * tanv(qd * cx))));
        }
    }
    const bool ok = worst_mono <= 1e-12 && worst_eig <= 1e-9 && worst_trig <= 1e-9;
    report(6, "Jackson derivative exactness", ok,
           "monomials rel " + fmt(worst_mono) + " (tol 1e-12); e_q eigen normalized " +
               fmt(worst_eig) + ", q-trig derivatives " + fmt(worst_trig) + " (tol 1e-9)");
}

// 7. q-integral: monomials, corrected antiderivatives, tan_q integral.
void criterion_q_integral() {
    EvalConfig cfg;
    QuadratureConfig quad;
    double worst_mono = 0.0;
    double worst_anti = 0.0;
    for (double qd : {0.3, 0.5, 0.9}) {
        QParam q(qd);
        for (int n = 0; n <= 8; ++n) {
            for (double x : {0.25, 1.0, 1.75}) {
                Evaluable f{[n](Complex t) { return std::pow(t, n); }, std::nullopt};
                const double expected = std::pow(x, n + 1) / q_integer(n + 1, q);
                worst_mono = std::max(worst_mono,
                                      std::abs(jackson_integral(f, x, q, quad).value - expected));
            }
        }
        Evaluable sinq{[&q, &cfg](Complex t) { return sin_q(t, q, cfg).value; }, std::nullopt};
        Evaluable cosq{[&q, &cfg](Complex t) { return cos_q(t, q, cfg).value; }, std::nullopt};
        auto tanv = [&q, &cfg](Complex t) { return tan_q(t, q, cfg).value; };
        for (double frac : {0.5, 1.0}) {
            const double x = frac * 0.4 * std::min(q.series_radius(), 3.0);
            const Complex cx(x);
            worst_anti = std::max(worst_anti, std::abs(jackson_integral(sinq, x, q, quad).value -
                                                       (1.0 - cos_q(cx, q, cfg).value)));
            worst_anti = std::max(worst_anti, std::abs(jackson_integral(cosq, x, q, quad).value -
                                                       sin_q(cx, q, cfg).value));
            const double xt = frac * std::min(0.3 / (1.0 - qd), 1.0);
            Evaluable form{[&tanv, qd](Complex t) { return 1.0 + tanv(t) * tanv(qd * t); },
                           std::nullopt};
            worst_anti = std::max(worst_anti, std::abs(jackson_integral(form, xt, q, quad).value -
                                                       tanv(Complex(xt))));
        }
    }
    const bool ok = worst_mono <= 1e-10 && worst_anti <= 1e-8;
    report(7, "q-integral: monomials, corrected antiderivatives, tan_q form", ok,
           "monomials " + fmt(worst_mono) + " (tol 1e-10); antiderivatives " + fmt(worst_anti) +
               " (tol 1e-8)");
}

// 8. Errata: the literal (uncorrected) forms must fail by the predicted amounts.
void criterion_errata() {
    QuadratureConfig quad;
    EvalConfig cfg;
    QParam q(0.5);

    Evaluable f{[](Complex t) { return t * t + 1.0; }, std::nullopt};
    Evaluable dqf{[&f, &q](Complex t) { return jackson_derivative(f, t, q); }, std::nullopt};
    const double lit_ft = std::abs(jackson_integral(dqf, 0.75, q, quad).value - f(Complex(0.75)));
    const bool ft_fails_as_predicted = std::abs(lit_ft - 1.0) <= 1e-9;

    Evaluable cosq{[&q, &cfg](Complex t) { return cos_q(t, q, cfg).value; }, std::nullopt};
    const Complex sin04 = sin_q(Complex(0.4), q, cfg).value;
    const double lit_cos =
        std::abs(jackson_integral(cosq, 0.4, q, quad).value - (-sin04));
    const bool cos_fails_as_predicted = std::abs(lit_cos - 2.0 * std::abs(sin04)) <= 1e-8;

    const bool ok = ft_fails_as_predicted && cos_fails_as_predicted;
    report(8, "errata confirmed (literal forms fail as predicted)", ok,
           "fundamental-theorem literal residual " + fmt(lit_ft) + " (want 1 +/- 1e-9); " +
               "cos antiderivative literal residual " + fmt(lit_cos) + " (want " +
               fmt(2.0 * std::abs(sin04)) + " +/- 1e-8)");
}

// 9. Daehee constant limit: gap at n = 50 below 1e-3 and shrinking from n = 10.
void criterion_daehee_limit() {
    EvalConfig cfg;
    bool ok = true;
    double worst_gap = 0.0;
    for (double qd : {0.3, 0.5, 0.7}) {
        QParam q(qd);
        const double constant = std::abs(daehee_constant(q, cfg).value);
        const double gap10 = std::abs(daehee_sequence_term(10, q).value - constant);
        const double gap50 = std::abs(daehee_sequence_term(50, q).value - constant);
        ok = ok && gap50 < 1e-3 && gap50 < gap10;
        worst_gap = std::max(worst_gap, gap50);
    }
    report(9, "Daehee constant limit (gap at n=50 < 1e-3, shrinking)", ok,
           "max gap at n=50: " + fmt(worst_gap));
}

// 10. Classical limit at q -> 1, strictly improving.
void criterion_classical_limit() {
    EvalConfig cfg;
    QParam q3(1.0 - 1e-3);
    QParam q4(1.0 - 1e-4);
    bool ok = true;
    double worst3 = 0.0;
    for (double x : {-1.0, -0.75, -0.5, -0.25, -0.1, 0.1, 0.25, 0.5, 0.75, 1.0}) {
        const Complex cx(x);
        const double s3 = std::abs(sin_q(cx, q3, cfg).value - std::sin(x));
        const double c3 = std::abs(cos_q(cx, q3, cfg).value - std::cos(x));
        const double e3 = std::abs(eq_series(cx, q3, cfg).value - std::exp(x));
        ok = ok && s3 <= 1e-2 && c3 <= 1e-2 && e3 <= 1e-2;
        worst3 = std::max({worst3, s3, c3, e3});
        ok = ok && std::abs(sin_q(cx, q4, cfg).value - std::sin(x)) < s3;
        ok = ok && std::abs(cos_q(cx, q4, cfg).value - std::cos(x)) < c3;
        ok = ok && std::abs(eq_series(cx, q4, cfg).value - std::exp(x)) < e3;
    }
    report(10, "classical limit (q = 1-1e-3 within 1e-2, strictly closer at 1-1e-4)", ok,
           "max error at q = 1-1e-3: " + fmt(worst3));
}

// 11. CLI contract: golden files, exit codes, parseability, check all green.
void criterion_cli_contract() {
    bool ok = true;
    std::string detail;

    const auto check_all = run_cli("check all --q 0.5 --seed 7");
    ok = ok && check_all.exit_code == 0;
    if (check_all.exit_code != 0) detail += "check-all exit != 0; ";

    ok = ok && run_cli("eval cosq --x 0.25 --q 0.5").out == read_file(golden_path("eval_cosq.csv"));
    ok = ok && run_cli("eval daehee --q 0.5 --format json").out ==
                   read_file(golden_path("eval_daehee.json"));
    ok = ok && run_cli("table sinq --x-min 0 --x-max 1 --steps 5 --q 0.5").out ==
                   read_file(golden_path("table_sinq.csv"));
    ok = ok && run_cli("check daehee --q 0.5 --seed 7 --samples 50").out ==
                   read_file(golden_path("check_daehee.csv"));
    ok = ok && run_cli("daehee-limit --n-max 12 --q 0.5").out ==
                   read_file(golden_path("daehee_limit.csv"));

    ok = ok && run_cli("eval nosuch --x 1").exit_code == 1;
    ok = ok && run_cli("eval eq --x 3.0 --q 0.5").exit_code == 2;
    ok = ok && run_cli("eval cscq --x 0 --q 0.5").exit_code == 2;

    try {
        const auto js = run_cli("table cosq --x-min 0 --x-max 1 --steps 4 --q 0.5 --format json");
        const auto parsed = nlohmann::json::parse(js.out);
        ok = ok && parsed.is_array() && parsed.size() == 4;
        const auto reports = nlohmann::json::parse(
            run_cli("check errata --q 0.5 --format json").out);
        ok = ok && reports.is_array() && reports.size() == 2 && reports[0].at("pass") == true;
    } catch (...) {
        ok = false;
        detail += "JSON parse failure; ";
    }

    report(11, "CLI contract (goldens, exit codes, parseability)", ok,
           detail.empty() ? "golden files byte-identical, exit codes 0/1/2 honored" : detail);
}

} // namespace

int main() {
    std::printf("qcalc acceptance suite\n");
    criterion_gaussian_binomials();
    criterion_daehee_formula();
    criterion_exponential_pair();
    criterion_addition_theorems();
    criterion_pythagorean();
    criterion_jackson_derivative();
    criterion_q_integral();
    criterion_errata();
    criterion_daehee_limit();
    criterion_classical_limit();
    criterion_cli_contract();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
