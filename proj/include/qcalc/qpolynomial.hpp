#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcalc {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in q with exact integer coefficients, stored densely by power.
// Canonical form: trailing zero coefficients stripped; the zero polynomial
// has an empty coefficient list and degree -1.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial one();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    // Coefficient of q^power; zero beyond the degree.
    BigInt coefficient(int power) const;

    // Multiply by q^k.
    QPolynomial shifted(int k) const;

    QPolynomial operator+(const QPolynomial& other) const;
    bool operator==(const QPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Horner evaluation in double precision.
    double evaluate(double q) const;

    // Exact coefficient sum = value at q = 1.
    BigInt evaluate_at_one() const;

    bool is_palindromic() const;
    bool all_nonnegative() const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

} // namespace qcalc
