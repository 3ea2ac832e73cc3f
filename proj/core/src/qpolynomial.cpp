#include "morikit/qpolynomial.hpp"

#include <algorithm>
#include <sstream>

namespace morikit {

void QPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational QPolynomial::operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

QPolynomial QPolynomial::operator+(const QPolynomial& rhs) const {
    std::vector<Rational> c(std::max(coeffs.size(), rhs.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) c[i] += rhs.coeffs[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& rhs) const {
    std::vector<Rational> c(std::max(coeffs.size(), rhs.coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] += coeffs[i];
    for (std::size_t i = 0; i < rhs.coeffs.size(); ++i) c[i] -= rhs.coeffs[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return QPolynomial();
    std::vector<Rational> c(coeffs.size() + rhs.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs.size(); ++j)
            c[i + j] += coeffs[i] * rhs.coeffs[j];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs);
    for (auto& e : c) e *= s;
    return QPolynomial(std::move(c));
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (os.tellp() > 0) os << (coeffs[i] > 0 ? " + " : " - ");
        else if (coeffs[i] < 0) os << "-";
        const Rational a = abs(coeffs[i]);
        if (i == 0 || a != 1) os << to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPolynomial binomial_poly(const Integer& alpha, const Integer& beta, unsigned long n) {
    QPolynomial p = QPolynomial::constant(1);
    for (unsigned long i = 0; i < n; ++i)
        p = p * QPolynomial({Rational(beta - static_cast<long>(i)), Rational(alpha)});
    return p * Rational(Integer(1), factorial(n));
}

} // namespace morikit
