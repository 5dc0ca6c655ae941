#include "qcalc/qcore.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <utility>

namespace qcalc {

double q_integer(int n, const QParam& q) {
    if (n < 0) {
        throw DomainError("q_integer: n must be >= 0");
    }
    if (n == 0) {
        return 0.0;
    }
    return one_minus_qpow(q.value(), n) / q.one_minus();
}

double q_factorial(int n, const QParam& q) {
    if (n < 0) {
        throw DomainError("q_factorial: n must be >= 0");
    }
    double prod = 1.0;
    for (int k = 1; k <= n; ++k) {
        prod *= q_integer(k, q);
    }
    return prod;
}

Complex q_shifted_factorial(Complex a, const QParam& q, int k) {
    require_finite(a, "q_shifted_factorial");
    if (k < 0) {
        throw DomainError("q_shifted_factorial: k must be >= 0");
    }
    Complex prod = 1.0;
    Complex aq = a;
    for (int j = 0; j < k; ++j) {
        prod *= (1.0 - aq);
        aq *= q.value();
    }
    return prod;
}

ValueWithError q_pochhammer_infinite(Complex a, const QParam& q, const EvalConfig& cfg) {
    require_finite(a, "q_pochhammer_infinite");
    cfg.validate();
    Complex prod = 1.0;
    Complex c = a; // a q^k
    for (int k = 0; k < cfg.max_terms; ++k) {
        if (std::abs(c) < cfg.abs_tol) {
            // Dropped factors deviate from 1 by at most |c| q^j in total ~ |c|/(1-q).
            double err = std::abs(prod) * std::abs(c) / q.one_minus();
            return {prod, err, k};
        }
        prod *= (1.0 - c);
        if (prod == 0.0) {
            return {Complex(0.0), 0.0, k + 1};
        }
        c *= q.value();
    }
    throw NonConvergentError("q_pochhammer_infinite: factor cap reached before tail tolerance");
}

// ---------------------------------------------------------------------------
// Exact Gaussian binomial rows.
//
// Rows n <= kSmallRowMax are memoized permanently; one larger "frontier" row
// is kept so that increasing-n sweeps advance incrementally instead of
// re-rolling from scratch. All access is serialized by a mutex; rows are
// immutable once published.
// ---------------------------------------------------------------------------

namespace {

constexpr int kSmallRowMax = 40;

using Row = std::vector<QPolynomial>;
using RowPtr = std::shared_ptr<const Row>;

Row next_row(const Row& prev) {
    const int m = static_cast<int>(prev.size()); // prev = row m-1
    Row row(static_cast<std::size_t>(m) + 1);
    row[0] = QPolynomial::one();
    for (int k = 1; k < m; ++k) {
        row[static_cast<std::size_t>(k)] =
            prev[static_cast<std::size_t>(k)].shifted(k) + prev[static_cast<std::size_t>(k - 1)];
    }
    row[static_cast<std::size_t>(m)] = QPolynomial::one();
    return row;
}

struct RowCache {
    std::mutex mu;
    std::vector<RowPtr> small; // contiguous rows 0..small.size()-1
    int big_n = -1;
    RowPtr big;
};

RowCache& row_cache() {
    static RowCache cache;
    return cache;
}

RowPtr get_row_shared(int n) {
    RowCache& cache = row_cache();
    std::lock_guard<std::mutex> lock(cache.mu);

    if (n < static_cast<int>(cache.small.size())) {
        return cache.small[static_cast<std::size_t>(n)];
    }
    if (n == cache.big_n) {
        return cache.big;
    }

    // Start from the highest cached row not above n.
    int start;
    RowPtr start_row;
    if (cache.big_n > static_cast<int>(cache.small.size()) - 1 && cache.big_n < n) {
        start = cache.big_n;
        start_row = cache.big;
    } else if (!cache.small.empty()) {
        start = static_cast<int>(cache.small.size()) - 1;
        start_row = cache.small.back();
    } else {
        start = 0;
        start_row = std::make_shared<const Row>(Row{QPolynomial::one()});
        cache.small.push_back(start_row);
    }

    Row current = *start_row;
    for (int m = start + 1; m <= n; ++m) {
        current = next_row(current);
        if (m <= kSmallRowMax && m == static_cast<int>(cache.small.size())) {
            cache.small.push_back(std::make_shared<const Row>(current));
        }
    }
    RowPtr result = (n < static_cast<int>(cache.small.size()))
                        ? cache.small[static_cast<std::size_t>(n)]
                        : std::make_shared<const Row>(std::move(current));
    if (n > kSmallRowMax && n >= cache.big_n) {
        cache.big_n = n;
        cache.big = result;
    }
    return result;
}

} // namespace

std::vector<QPolynomial> q_binomial_row(int n) {
    if (n < 0) {
        throw IndexError("q_binomial_row: n must be >= 0");
    }
    return *get_row_shared(n);
}

QPolynomial q_binomial_poly(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw IndexError("q_binomial_poly: require 0 <= k <= n");
    }
    return (*get_row_shared(n))[static_cast<std::size_t>(k)];
}

double q_binomial_numeric(double x, int k, const QParam& q) {
    require_finite(x, "q_binomial_numeric");
    if (k < 0) {
        throw IndexError("q_binomial_numeric: k must be >= 0");
    }
    double num = 1.0;
    for (int j = 0; j < k; ++j) {
        num *= one_minus_qpow(q.value(), x - j);
    }
    double den = 1.0; // (q:q)_k = [k]_q! (1-q)^k
    for (int i = 1; i <= k; ++i) {
        den *= one_minus_qpow(q.value(), i);
    }
    return num / den;
}

GaussianRowValues::GaussianRowValues(const QParam& q) : q_(q.value()) {
    rows_.push_back({1.0});
}

const std::vector<double>& GaussianRowValues::row(int n) {
    if (n < 0) {
        throw IndexError("GaussianRowValues: n must be >= 0");
    }
    while (static_cast<int>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        const int m = static_cast<int>(prev.size()); // prev = row m-1
        std::vector<double> row(static_cast<std::size_t>(m) + 1);
        row[0] = 1.0;
        double qk = q_;
        for (int k = 1; k < m; ++k) {
            row[static_cast<std::size_t>(k)] =
                qk * prev[static_cast<std::size_t>(k)] + prev[static_cast<std::size_t>(k - 1)];
            qk *= q_;
        }
        row[static_cast<std::size_t>(m)] = 1.0;
        rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)];
}

namespace {

// Powers x^0..x^n by running product; x^0 = 1 exactly.
std::vector<Complex> power_table(Complex x, int n) {
    std::vector<Complex> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * x;
    }
    return p;
}

} // namespace

Complex q_add_power(Complex x, Complex y, int n, const QParam& q) {
    require_finite(x, "q_add_power");
    require_finite(y, "q_add_power");
    if (n < 0) {
        throw DomainError("q_add_power: n must be >= 0");
    }
    const auto xp = power_table(x, n);
    const auto yp = power_table(y, n);
    Complex sum = 0.0;
    if (n <= kSmallRowMax) {
        const RowPtr row = get_row_shared(n);
        for (int k = 0; k <= n; ++k) {
            sum += (*row)[static_cast<std::size_t>(k)].evaluate(q.value()) *
                   xp[static_cast<std::size_t>(k)] * yp[static_cast<std::size_t>(n - k)];
        }
    } else {
        GaussianRowValues rows(q);
        const auto& row = rows.row(n);
        for (int k = 0; k <= n; ++k) {
            sum += row[static_cast<std::size_t>(k)] * xp[static_cast<std::size_t>(k)] *
                   yp[static_cast<std::size_t>(n - k)];
        }
    }
    return sum;
}

Complex q_sub_power(Complex x, Complex y, int n, const QParam& q) {
    require_finite(x, "q_sub_power");
    require_finite(y, "q_sub_power");
    if (n < 0) {
        throw DomainError("q_sub_power: n must be >= 0");
    }
    const auto xp = power_table(x, n);
    const auto yp = power_table(y, n);
    Complex sum = 0.0;
    if (n <= kSmallRowMax) {
        const RowPtr row = get_row_shared(n);
        for (int k = 0; k <= n; ++k) {
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * (*row)[static_cast<std::size_t>(k)].evaluate(q.value()) *
                   xp[static_cast<std::size_t>(k)] * yp[static_cast<std::size_t>(n - k)];
        }
    } else {
        GaussianRowValues rows(q);
        const auto& row = rows.row(n);
        for (int k = 0; k <= n; ++k) {
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * row[static_cast<std::size_t>(k)] * xp[static_cast<std::size_t>(k)] *
                   yp[static_cast<std::size_t>(n - k)];
        }
    }
    return sum;
}

QSumPowers::QSumPowers(Complex x, Complex y, const QParam& q) : x_(x), y_(y), rows_(q) {
    require_finite(x, "QSumPowers");
    require_finite(y, "QSumPowers");
    x_powers_ = {1.0};
    y_powers_ = {1.0};
    powers_ = {Complex(1.0)};
}

void QSumPowers::advance_to(int n) {
    while (static_cast<int>(powers_.size()) <= n) {
        const int m = static_cast<int>(powers_.size());
        x_powers_.push_back(x_powers_.back() * x_);
        y_powers_.push_back(y_powers_.back() * y_);
        const auto& row = rows_.row(m);
        Complex sum = 0.0;
        for (int k = 0; k <= m; ++k) {
            sum += row[static_cast<std::size_t>(k)] * x_powers_[static_cast<std::size_t>(k)] *
                   y_powers_[static_cast<std::size_t>(m - k)];
        }
        powers_.push_back(sum);
    }
}

Complex QSumPowers::power(int n) {
    if (n < 0) {
        throw DomainError("QSumPowers: n must be >= 0");
    }
    advance_to(n);
    return powers_[static_cast<std::size_t>(n)];
}

} // namespace qcalc
