#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcalc/qparam.hpp"
#include "qcalc/report.hpp"
#include "qcalc/types.hpp"

namespace qcalc::identities {

// Deterministic uniform sampler: the u64 -> double mapping is pinned so that
// seeded sweeps are reproducible byte-for-byte across platforms.
class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

private:
    std::mt19937_64 engine_;
};

struct SweepOptions {
    int samples = 100;
    std::uint64_t seed = 7;
    EvalConfig eval{};
    QuadratureConfig quad{};
};

// Sampling radius frac/(1-q), capped so q -> 1 sweeps stay in range.
double sweep_radius(const QParam& q, double frac);

// --- single-point residuals (building blocks shared with the acceptance suite)

// |e_q(ix) - (cos_q x + i sin_q x)| / (1 + |e_q(ix)|)
double daehee_formula_residual(double x, const QParam& q, const EvalConfig& cfg);

// |e_q(z) E_q(-z) - 1|
double exp_pair_residual(Complex z, const QParam& q, const EvalConfig& cfg);

// |eq_series(z) - eq_product(z)| / (1 + max magnitude)
double exp_series_product_gap(Complex z, const QParam& q, const EvalConfig& cfg);

// |cos_q x - (e_q(ix) + e_q(-ix))/2|  and  |sin_q x - (e_q(ix) - e_q(-ix))/(2i)|
double cos_from_exponentials_residual(double x, const QParam& q, const EvalConfig& cfg);
double sin_from_exponentials_residual(double x, const QParam& q, const EvalConfig& cfg);

enum class AdditionKind { Exp, Sin, Cos };

// q-sum evaluation vs the addition-theorem combination, e.g. for Sin:
// |sin_q(x (+)_q y) - (sin_q x cos_q y + cos_q x sin_q y)|
double addition_residual(AdditionKind kind, double x, double y, const QParam& q,
                         const EvalConfig& cfg);

// Pythagorean / double-angle family. The quotient lines return nullopt when
// the denominator is within `guard` of zero (pole-skip; residuals there scale
// like eval-error / denominator^2 and carry no information).
double pythagorean_qdiff_residual(double x, const QParam& q, const EvalConfig& cfg);
double double_angle_cos_residual(double x, const QParam& q, const EvalConfig& cfg);
double double_angle_sin_residual(double x, const QParam& q, const EvalConfig& cfg);
std::optional<double> tan_sec_residual(double x, const QParam& q, const EvalConfig& cfg,
                                       double guard);
std::optional<double> cot_csc_residual(double x, const QParam& q, const EvalConfig& cfg,
                                       double guard);

// --- sweeps

std::vector<IdentityReport> check_daehee(const QParam& q, const SweepOptions& opts);
std::vector<IdentityReport> check_addition(const QParam& q, const SweepOptions& opts);
std::vector<IdentityReport> check_pythagorean(const QParam& q, const SweepOptions& opts);
std::vector<IdentityReport> check_calculus(const QParam& q, const SweepOptions& opts);
std::vector<IdentityReport> check_errata(const QParam& q, const SweepOptions& opts);
std::vector<IdentityReport> check_all(const QParam& q, const SweepOptions& opts);

// Dispatch by set name: all, daehee, addition, pythagorean, calculus, errata.
// Throws DomainError on an unknown set.
std::vector<IdentityReport> check_set(const std::string& set, const QParam& q,
                                      const SweepOptions& opts);

} // namespace qcalc::identities
