// qcalc: batch evaluator and identity checker for the q-calculus library.
//
// Subcommands: eval, table, check, daehee-limit. Exit codes: 0 success,
// 1 usage error, 2 domain/pole/evaluation error, 3 identity check failure.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcalc/identities.hpp"
#include "qcalc/qcalculus.hpp"
#include "qcalc/qfunctions.hpp"

using json = nlohmann::ordered_json;
using namespace qcalc;

namespace {

// Shortest round-trip decimal formatting; locale-independent, '.' separator.
std::string fmt_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_complex(Complex z) {
    std::string s = fmt_double(z.real());
    s += (z.imag() < 0 || std::isnan(z.imag())) ? "" : "+";
    s += fmt_double(z.imag());
    s += "i";
    return s;
}

// JSON value for a double; non-finite values become strings since JSON has
// no representation for them.
json json_num(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return fmt_double(v);
}

struct GlobalOptions {
    double q = 0.5;
    std::optional<double> tol;
    int max_terms = 512;
    std::string format = "csv";
    std::uint64_t seed = 7;
    std::string out = "stdout";

    EvalConfig eval_config() const {
        EvalConfig cfg;
        cfg.max_terms = max_terms;
        if (tol) {
            cfg.abs_tol = *tol;
            cfg.rel_tol = *tol;
        }
        return cfg;
    }

    QuadratureConfig quad_config() const {
        QuadratureConfig cfg;
        cfg.max_points = 4 * max_terms;
        if (tol) {
            cfg.tail_tol = *tol;
        }
        return cfg;
    }
};

void write_output(const GlobalOptions& opts, const std::string& payload) {
    if (opts.out == "stdout" || opts.out == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
        throw CLI::ValidationError("--out", "cannot open '" + opts.out + "' for writing");
    }
    f << payload;
}

const std::map<std::string, QFunctionKind>& function_names() {
    static const std::map<std::string, QFunctionKind> names = {
        {"eq", QFunctionKind::EqLower}, {"Eq", QFunctionKind::EqUpper},
        {"sinq", QFunctionKind::Sin},   {"cosq", QFunctionKind::Cos},
        {"tanq", QFunctionKind::Tan},   {"secq", QFunctionKind::Sec},
        {"cscq", QFunctionKind::Csc},   {"cotq", QFunctionKind::Cot},
    };
    return names;
}

std::string error_kind(const QError& e) {
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const NonConvergentError*>(&e)) return "NonConvergent";
    if (dynamic_cast<const DivergentError*>(&e)) return "Divergent";
    if (dynamic_cast<const IndexError*>(&e)) return "IndexError";
    return "Error";
}

// --- eval ------------------------------------------------------------------

int run_eval(const GlobalOptions& opts, const std::string& fn, std::optional<double> x) {
    const bool is_daehee = (fn == "daehee");
    if (!is_daehee && function_names().count(fn) == 0) {
        std::cerr << "eval: unknown function '" << fn << "'\n";
        return 1;
    }
    if (is_daehee && x) {
        std::cerr << "eval: daehee takes no --x\n";
        return 1;
    }
    if (!is_daehee && !x) {
        std::cerr << "eval: --x is required for '" << fn << "'\n";
        return 1;
    }

    const std::string header = "fn,q,x,value_re,value_im,error_estimate,terms_used,status\n";
    std::string status = "ok";
    ValueWithError result;
    try {
        const QParam q(opts.q);
        const EvalConfig cfg = opts.eval_config();
        if (is_daehee) {
            result = daehee_constant(q, cfg);
        } else {
            result = QFunctionHandle(function_names().at(fn), q).evaluate(Complex(*x), cfg);
        }
    } catch (const QError& e) {
        const std::string kind = error_kind(e);
        if (opts.format == "json") {
            json rec;
            rec["fn"] = fn;
            rec["q"] = opts.q;
            if (x) rec["x"] = *x;
            rec["status"] = kind;
            rec["message"] = e.what();
            write_output(opts, rec.dump(2) + "\n");
        } else {
            write_output(opts, header + fn + "," + fmt_double(opts.q) + "," +
                                   (x ? fmt_double(*x) : "") + ",,,," + kind + "\n");
        }
        return 2;
    }

    if (opts.format == "json") {
        json rec;
        rec["fn"] = fn;
        rec["q"] = opts.q;
        if (x) rec["x"] = *x;
        rec["value_re"] = json_num(result.value.real());
        rec["value_im"] = json_num(result.value.imag());
        rec["error_estimate"] = json_num(result.error_estimate);
        rec["terms_used"] = result.terms_used;
        rec["status"] = "ok";
        write_output(opts, rec.dump(2) + "\n");
    } else {
        write_output(opts, header + fn + "," + fmt_double(opts.q) + "," +
                               (x ? fmt_double(*x) : "") + "," + fmt_double(result.value.real()) +
                               "," + fmt_double(result.value.imag()) + "," +
                               fmt_double(result.error_estimate) + "," +
                               std::to_string(result.terms_used) + ",ok\n");
    }
    return 0;
}

// --- table -----------------------------------------------------------------

int run_table(const GlobalOptions& opts, const std::string& fn, double x_min, double x_max,
              int steps) {
    if (function_names().count(fn) == 0) {
        std::cerr << "table: unknown function '" << fn << "'\n";
        return 1;
    }
    if (steps < 1 || x_min > x_max) {
        std::cerr << "table: require steps >= 1 and x_min <= x_max\n";
        return 1;
    }
    const QParam q(opts.q);
    const EvalConfig cfg = opts.eval_config();
    const QFunctionHandle handle(function_names().at(fn), q);

    int ok_rows = 0;
    std::string csv = "x,value_re,value_im,error_estimate,status\n";
    json rows = json::array();
    for (int i = 0; i < steps; ++i) {
        const double x = (steps == 1) ? x_min : x_min + (x_max - x_min) * i / (steps - 1);
        json row;
        row["x"] = x;
        try {
            const ValueWithError v = handle.evaluate(Complex(x), cfg);
            ++ok_rows;
            csv += fmt_double(x) + "," + fmt_double(v.value.real()) + "," +
                   fmt_double(v.value.imag()) + "," + fmt_double(v.error_estimate) + ",ok\n";
            row["value_re"] = json_num(v.value.real());
            row["value_im"] = json_num(v.value.imag());
            row["error_estimate"] = json_num(v.error_estimate);
            row["status"] = "ok";
        } catch (const QError& e) {
            const std::string kind = error_kind(e);
            csv += fmt_double(x) + ",,,," + kind + "\n";
            row["value_re"] = nullptr;
            row["value_im"] = nullptr;
            row["error_estimate"] = nullptr;
            row["status"] = kind;
        }
        rows.push_back(std::move(row));
    }
    write_output(opts, opts.format == "json" ? rows.dump(2) + "\n" : csv);
    return ok_rows > 0 ? 0 : 2;
}

// --- check -----------------------------------------------------------------

json report_to_json(const IdentityReport& r) {
    json rec;
    rec["identity_id"] = r.identity_id;
    rec["q"] = r.q;
    rec["samples"] = r.samples;
    rec["max_abs_residual"] = json_num(r.max_abs_residual);
    json argmax = json::array();
    for (Complex a : r.argmax_input) {
        argmax.push_back(json::array({json_num(a.real()), json_num(a.imag())}));
    }
    rec["argmax_input"] = argmax;
    rec["tolerance"] = json_num(r.tolerance);
    rec["pass"] = r.pass;
    return rec;
}

std::string report_to_csv_row(const IdentityReport& r) {
    std::string argmax;
    for (std::size_t i = 0; i < r.argmax_input.size(); ++i) {
        if (i > 0) argmax += ";";
        argmax += fmt_complex(r.argmax_input[i]);
    }
    return r.identity_id + "," + fmt_double(r.q) + "," + std::to_string(r.samples) + "," +
           fmt_double(r.max_abs_residual) + "," + argmax + "," + fmt_double(r.tolerance) + "," +
           (r.pass ? "true" : "false") + "\n";
}

int run_check(const GlobalOptions& opts, const std::string& set, int samples) {
    const QParam q(opts.q);
    identities::SweepOptions sweep;
    sweep.samples = samples;
    sweep.seed = opts.seed;
    sweep.eval = opts.eval_config();
    sweep.quad = opts.quad_config();
    std::cerr << "seed: " << opts.seed << "\n";

    const auto reports = identities::check_set(set, q, sweep);

    if (opts.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
        }
        write_output(opts, arr.dump(2) + "\n");
    } else {
        std::string csv = "identity_id,q,samples,max_abs_residual,argmax_input,tolerance,pass\n";
        for (const auto& r : reports) {
            csv += report_to_csv_row(r);
        }
        write_output(opts, csv);
    }
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return all_pass ? 0 : 3;
}

// --- daehee-limit ----------------------------------------------------------

int run_daehee_limit(const GlobalOptions& opts, int n_max) {
    if (n_max < 1) {
        std::cerr << "daehee-limit: --n-max must be >= 1\n";
        return 1;
    }
    const QParam q(opts.q);
    const EvalConfig cfg = opts.eval_config();
    const double constant = std::abs(daehee_constant(q, cfg).value);

    std::string csv = "n,value,gap\n";
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        const DaeheeSequenceTerm term = daehee_sequence_term(n, q);
        const double gap = std::abs(term.value - constant);
        csv += std::to_string(n) + "," + fmt_double(term.value) + "," + fmt_double(gap) + "\n";
        json row;
        row["n"] = n;
        row["value"] = json_num(term.value);
        row["gap"] = json_num(gap);
        rows.push_back(std::move(row));
    }
    write_output(opts, opts.format == "json" ? rows.dump(2) + "\n" : csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions opts;
    CLI::App app{"q-calculus evaluator and identity checker"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.add_option("--q", opts.q, "deformation parameter q in (0,1)")->capture_default_str();
    app.add_option("--tol", opts.tol, "override evaluation tolerances (abs, rel, quadrature tail)");
    app.add_option("--max-terms", opts.max_terms, "series term cap (quadrature cap is 4x)")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for randomized sweeps")->capture_default_str();
    app.add_option("--out", opts.out, "output path or 'stdout'")->capture_default_str();

    std::string eval_fn;
    std::optional<double> eval_x;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
    eval_cmd->add_option("fn", eval_fn, "eq|Eq|sinq|cosq|tanq|secq|cscq|cotq|daehee")->required();
    eval_cmd->add_option("--x", eval_x, "argument");

    std::string table_fn;
    double x_min = 0.0, x_max = 1.0;
    int steps = 11;
    auto* table_cmd = app.add_subcommand("table", "tabulate a function over a grid");
    table_cmd->add_option("fn", table_fn, "eq|Eq|sinq|cosq|tanq|secq|cscq|cotq")->required();
    table_cmd->add_option("--x-min", x_min, "grid start")->capture_default_str();
    table_cmd->add_option("--x-max", x_max, "grid end")->capture_default_str();
    table_cmd->add_option("--steps", steps, "grid points")->capture_default_str();

    std::string check_set = "all";
    int check_samples = 100;
    auto* check_cmd = app.add_subcommand("check", "run identity/erratum sweeps");
    check_cmd->add_option("set", check_set, "all|daehee|addition|pythagorean|calculus|errata")
        ->check(CLI::IsMember({"all", "daehee", "addition", "pythagorean", "calculus", "errata"}));
    check_cmd->add_option("--samples", check_samples, "samples per randomized identity")
        ->capture_default_str();

    int n_max = 50;
    auto* limit_cmd = app.add_subcommand("daehee-limit", "tabulate the Daehee constant limit");
    limit_cmd->add_option("--n-max", n_max, "largest sequence index")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(opts, eval_fn, eval_x);
        }
        if (table_cmd->parsed()) {
            return run_table(opts, table_fn, x_min, x_max, steps);
        }
        if (check_cmd->parsed()) {
            return run_check(opts, check_set, check_samples);
        }
        if (limit_cmd->parsed()) {
            return run_daehee_limit(opts, n_max);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const QError& e) {
        json rec;
        rec["status"] = error_kind(e);
        rec["message"] = e.what();
        std::cout << rec.dump(2) << "\n";
        return 2;
    }
    return 1;
}
