#include "qcalc/qpolynomial.hpp"

#include <algorithm>
#include <utility>

namespace qcalc {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPolynomial QPolynomial::one() {
    return QPolynomial({BigInt(1)});
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt QPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
        return BigInt(0);
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero() || k == 0) {
        return k == 0 ? *this : QPolynomial(coeffs_);
    }
    std::vector<BigInt> out(coeffs_.size() + static_cast<std::size_t>(k));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + k);
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
    const auto& a = coeffs_;
    const auto& b = other.coeffs_;
    std::vector<BigInt> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return QPolynomial(std::move(out));
}

double QPolynomial::evaluate(double q) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + it->convert_to<double>();
    }
    return acc;
}

BigInt QPolynomial::evaluate_at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_) {
        sum += c;
    }
    return sum;
}

bool QPolynomial::is_palindromic() const {
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (coeffs_[i] != coeffs_[n - 1 - i]) {
            return false;
        }
    }
    return true;
}

bool QPolynomial::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c >= 0; });
}

} // namespace qcalc
