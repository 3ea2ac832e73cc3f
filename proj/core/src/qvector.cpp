#include "morikit/qvector.hpp"

#include "morikit/errors.hpp"

#include <sstream>

namespace morikit {

bool QVector::is_zero() const {
    for (const auto& e : entries)
        if (e != 0) return false;
    return true;
}

static void check_same_size(const QVector& a, const QVector& b) {
    if (a.size() != b.size())
        throw ValidationError("vector length mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
}

QVector QVector::operator+(const QVector& rhs) const {
    check_same_size(*this, rhs);
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries[i] + rhs[i];
    return r;
}

QVector QVector::operator-(const QVector& rhs) const {
    check_same_size(*this, rhs);
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries[i] - rhs[i];
    return r;
}

QVector QVector::operator-() const {
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -entries[i];
    return r;
}

QVector QVector::operator*(const Rational& s) const {
    QVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = entries[i] * s;
    return r;
}

bool QVector::operator<(const QVector& rhs) const {
    for (std::size_t i = 0; i < size() && i < rhs.size(); ++i) {
        int c = cmp(entries[i], rhs[i]);
        if (c != 0) return c < 0;
    }
    return size() < rhs.size();
}

std::string QVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << to_string(entries[i]);
    }
    os << ')';
    return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
    check_same_size(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVector primitive(const QVector& v) {
    if (v.is_zero()) return v;
    Integer den_lcm = 1;
    for (const auto& e : v.entries)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    Integer num_gcd = 0;
    std::vector<Integer> ints;
    ints.reserve(v.size());
    for (const auto& e : v.entries) {
        Integer z = e.get_num() * (den_lcm / e.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), z.get_mpz_t());
        ints.push_back(std::move(z));
    }
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / num_gcd);
    return r;
}

QVector primitive_signed(const QVector& v) {
    QVector r = primitive(v);
    for (const auto& e : r.entries) {
        if (e > 0) return r;
        if (e < 0) return -r;
    }
    return r;
}

bool proportional(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) return false;
    const QVector pa = primitive(a), pb = primitive(b);
    return pa == pb || pa == -pb;
}

} // namespace morikit
