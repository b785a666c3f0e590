#include "permstat/qpolynomial.hpp"

#include <stdexcept>
#include <utility>

namespace permstat {

QPolynomial::QPolynomial(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPolynomial QPolynomial::one() { return QPolynomial(BigInt(1)); }

QPolynomial QPolynomial::monomial(int degree, BigInt coeff) {
    QPolynomial p;
    p.add_term(degree, coeff);
    return p;
}

BigInt QPolynomial::coefficient(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[deg];
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        value = value * q + *it;
    }
    return value;
}

void QPolynomial::add_term(int deg, const BigInt& coeff) {
    if (deg < 0) throw std::invalid_argument("add_term: negative degree");
    if (coeff == 0) return;
    if (deg >= static_cast<int>(coeffs_.size())) coeffs_.resize(deg + 1);
    coeffs_[deg] += coeff;
    normalize();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return QPolynomial();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        const BigInt& c = coeffs_[d];
        if (c == 0) continue;
        const bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const bool suppress_one = (mag == 1 && d > 0);
        if (!suppress_one) out += mag.str();
        if (d == 1) {
            out += "q";
        } else if (d > 1) {
            out += "q^" + std::to_string(d);
        }
    }
    return out;
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace permstat
