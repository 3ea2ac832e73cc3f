#ifndef MORIKIT_QPOLYNOMIAL_HPP
#define MORIKIT_QPOLYNOMIAL_HPP

#include "morikit/rational.hpp"

#include <string>
#include <vector>

namespace morikit {

/**
 * Univariate polynomial with exact rational coefficients, ascending degree.
 * The zero polynomial is the empty coefficient list; otherwise the last
 * coefficient is nonzero.
 */
struct QPolynomial {
    std::vector<Rational> coeffs;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }
    static QPolynomial constant(const Rational& c) { return QPolynomial({c}); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    /** Degree, -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational leading() const { return coeffs.empty() ? Rational(0) : coeffs.back(); }

    Rational operator()(const Rational& t) const;
    Rational operator()(const Integer& t) const { return (*this)(Rational(t)); }

    QPolynomial operator+(const QPolynomial& rhs) const;
    QPolynomial operator-(const QPolynomial& rhs) const;
    QPolynomial operator*(const QPolynomial& rhs) const;
    QPolynomial operator*(const Rational& s) const;
    bool operator==(const QPolynomial& rhs) const { return coeffs == rhs.coeffs; }

    std::string str() const;
};

/**
 * The degree-n polynomial in t equal to binom(alpha*t + beta, n), i.e.
 * prod_{i=0..n-1} (alpha*t + beta - i) / n!. Exact; degree is n when alpha
 * is nonzero. Note this is the polynomial identity, not the combinatorial
 * convention: callers that want binom(a, n) = 0 for a < n must skip such
 * terms themselves.
 */
QPolynomial binomial_poly(const Integer& alpha, const Integer& beta, unsigned long n);

} // namespace morikit

#endif
