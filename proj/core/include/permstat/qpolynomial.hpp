#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace permstat {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with arbitrary-precision integer coefficients, stored
/// dense by ascending degree and kept free of trailing zero coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(BigInt constant);
    explicit QPolynomial(std::vector<BigInt> coeffs);

    static QPolynomial one();
    static QPolynomial monomial(int degree, BigInt coeff = BigInt(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int deg) const;

    BigInt evaluate(const BigInt& q) const;

    void add_term(int deg, const BigInt& coeff);

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);

    friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

    bool operator==(const QPolynomial&) const = default;

    /// Ascending-degree display: "1 + 3q + 2q^2"; the zero polynomial is "0".
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;

    void normalize();
};

}  // namespace permstat
