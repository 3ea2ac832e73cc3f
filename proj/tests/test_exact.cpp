#include "morikit/errors.hpp"
#include "morikit/qmatrix.hpp"
#include "morikit/qpolynomial.hpp"
#include "morikit/rational.hpp"
#include "morikit/subsets.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <random>

using namespace morikit;
using morikit::testing::random_rational;

namespace {

// Independent oracle: binomial by plain multiplicative loop over rationals.
Integer binom_oracle(const Integer& a, unsigned long k) {
    if (a < Integer(static_cast<long>(k))) return 0;
    Rational r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        Rational factor(a - static_cast<long>(i), i + 1);
        factor.canonicalize();
        r *= factor;
    }
    REQUIRE(r.get_den() == 1);
    return r.get_num();
}

} // namespace

TEST_SUITE("exact") {

TEST_CASE("rational arithmetic is exact on random 256-bit inputs") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = random_rational(rng, 256);
        Rational b = random_rational(rng, 256);
        if (b == 0) b = 1;
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("rational parse/format round trip and canonical form") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("17")) == "17");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("a/2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational q = random_rational(rng, 128);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("binomial_poly matches hand expansions") {
    // binom(t+1, 2) = (t^2 + t)/2
    const QPolynomial p = binomial_poly(1, 1, 2);
    CHECK(p == QPolynomial({Rational(0), Rational(1, 2), Rational(1, 2)}));
    // binom(2t+3, 3) at t = 1 is binom(5, 3)
    CHECK(binomial_poly(2, 3, 3)(Integer(1)) == 10);
    // binom(anything, 0) = 1
    CHECK(binomial_poly(5, 7, 0) == QPolynomial::constant(1));
}

TEST_CASE("binomial_poly agrees with the integer binomial wherever defined") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const long alpha = static_cast<long>(rng() % 7);
        const long beta = static_cast<long>(rng() % 12) - 3;
        const unsigned long n = rng() % 7;
        const QPolynomial p = binomial_poly(alpha, beta, n);
        if (alpha != 0) CHECK(p.degree() == static_cast<int>(n));
        for (long t = 0; t <= 6; ++t) {
            const Integer arg = alpha * t + beta;
            if (arg < Integer(static_cast<long>(n))) continue;
            CHECK(p(Integer(t)) == Rational(binom_oracle(arg, n)));
        }
    }
}

TEST_CASE("binomial is zero below the diagonal and matches the oracle") {
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(10, 5) == 252);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Integer a = Integer(static_cast<long>(rng() % 40)) - 5;
        const unsigned long k = rng() % 12;
        CHECK(binomial(a, k) == binom_oracle(a, k));
    }
}

TEST_CASE("kernel_basis on the stated examples") {
    // zero 1x3 matrix: full kernel
    QMatrix zero(1, 3);
    CHECK(kernel_basis(zero).size() == 3);
    // identity: trivial kernel
    QMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.rows[i][i] = 1;
    CHECK(kernel_basis(id).empty());
    // one all-ones row over 6 columns: the g = 2 section relations
    QMatrix ones(1, 6);
    for (int i = 0; i < 6; ++i) ones.rows[0][i] = 1;
    const auto basis = kernel_basis(ones);
    CHECK(basis.size() == 5);
    CHECK(Integer(static_cast<long>(basis.size())) == binomial(4, 2) - binomial(4, 0));
    for (const QVector& v : basis) CHECK(apply(ones, v).is_zero());
}

TEST_CASE("kernel vectors are canonical and orthogonal to the rows") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.rows[i][j] = Rational(static_cast<long>(rng() % 7) - 3);
        const auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == c);
        for (const QVector& v : basis) {
            CHECK(apply(m, v).is_zero());
            CHECK(v == primitive_signed(v));
        }
    }
}

TEST_CASE("rank on the stated examples") {
    QMatrix id(4, 4);
    for (int i = 0; i < 4; ++i) id.rows[i][i] = 1;
    CHECK(rank(id) == 4);

    // rows (1,-1,-1,0,0,0)-pattern over all pairs from five slots, in
    // coordinates (a, c_1..c_5): spans a hyperplane of the 6-dim lattice
    std::vector<QVector> rows;
    for_each_subset(5, 2, [&](const std::vector<int>& s) {
        QVector v(6);
        v[0] = 1;
        v[s[0] + 1] = -1;
        v[s[1] + 1] = -1;
        rows.push_back(v);
    });
    CHECK(rows.size() == 10);
    CHECK(rank(QMatrix(rows)) == 5);

    QMatrix single(1, 5);
    single.rows[0][2] = Rational(7, 3);
    CHECK(rank(single) == 1);
}

TEST_CASE("polynomial algebra basics") {
    const QPolynomial t({Rational(0), Rational(1)});
    const QPolynomial q = t * t - t * Rational(2) + QPolynomial::constant(1);
    CHECK(q(Integer(1)) == 0);
    CHECK(q.degree() == 2);
    CHECK((q - q).is_zero());
    CHECK(q.str() == "t^2 - 2*t + 1");
}

} // TEST_SUITE
