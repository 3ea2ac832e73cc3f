#ifndef MORIKIT_QVECTOR_HPP
#define MORIKIT_QVECTOR_HPP

#include "morikit/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace morikit {

/** Fixed-length vector of exact rationals. Immutable by convention after construction. */
struct QVector {
    std::vector<Rational> entries;

    QVector() = default;
    explicit QVector(std::size_t n) : entries(n, Rational(0)) {}
    explicit QVector(std::vector<Rational> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    const Rational& operator[](std::size_t i) const { return entries[i]; }
    Rational& operator[](std::size_t i) { return entries[i]; }

    bool is_zero() const;

    QVector operator+(const QVector& rhs) const;
    QVector operator-(const QVector& rhs) const;
    QVector operator-() const;
    QVector operator*(const Rational& s) const;

    bool operator==(const QVector& rhs) const { return entries == rhs.entries; }
    bool operator!=(const QVector& rhs) const { return !(*this == rhs); }
    /** Lexicographic order on entries; vectors of equal length assumed. */
    bool operator<(const QVector& rhs) const;

    std::string str() const;
};

Rational dot(const QVector& a, const QVector& b);

/**
 * Integer-primitive representative of the line/ray through v: denominators
 * cleared, entries divided by their gcd. The sign of v is preserved; rays
 * are directions, so flipping the sign would leave the cone.
 */
QVector primitive(const QVector& v);

/** As primitive(), but additionally the first nonzero entry is made positive.
 *  Canonical form for kernel and lineality basis vectors, where sign is free. */
QVector primitive_signed(const QVector& v);

bool proportional(const QVector& a, const QVector& b);

} // namespace morikit

#endif
