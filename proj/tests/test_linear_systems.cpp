#include "morikit/errors.hpp"
#include "morikit/linear_systems.hpp"
#include "morikit/subsets.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <random>

using namespace morikit;

namespace {

// Independent oracle: the alternating sum with every subset enumerated
// one by one, no grouping.
Integer virtual_dim_oracle(const LinearSystem& sys) {
    Integer total = binomial(Integer(sys.n) + sys.d, static_cast<unsigned long>(sys.n));
    for (int r = 0; r < sys.s(); ++r) {
        const int sign = (r % 2 == 0) ? -1 : 1;
        for_each_subset(sys.s(), r + 1, [&](const std::vector<int>& idx) {
            Integer sum = 0;
            for (int i : idx) sum += sys.mults[i];
            Integer k = sum - r * sys.d;
            if (k < 0) k = 0;
            total += sign * binomial(Integer(sys.n) + k - r - 1, static_cast<unsigned long>(sys.n));
        });
    }
    return total;
}

LinearSystem scale(const LinearSystem& sys, long t) {
    std::vector<Integer> mults;
    for (const Integer& m : sys.mults) mults.push_back(m * t);
    return make_system(sys.n, sys.d * t, std::move(mults));
}

} // namespace

TEST_SUITE("linear_systems") {

TEST_CASE("k values") {
    const LinearSystem sys = make_system(3, 2, std::vector<Integer>(5, Integer(1)));
    CHECK(k_value(sys, {1}) == 1);
    CHECK(k_value(sys, {1, 2}) == 0);
    const LinearSystem asym = make_system(2, 3, {Integer(4), Integer(1), Integer(2)});
    CHECK(k_value(asym, {1}) == 4);
    CHECK(k_value(asym, {1, 3}) == 3);
    CHECK(k_value(asym, {2, 3}) == 0);
    CHECK_THROWS_AS(k_value(sys, {}), ValidationError);
    CHECK_THROWS_AS(k_value(sys, {9}), ValidationError);
}

TEST_CASE("linear virtual dimension examples") {
    CHECK(linear_virtual_dim(make_system(3, 2, std::vector<Integer>(5, Integer(1)))) == 5);
    CHECK(linear_virtual_dim(make_system(4, 3, {})) == binomial(7, 3));
    CHECK(linear_virtual_dim(make_system(2, 3, std::vector<Integer>(4, Integer(1)))) == 6);
}

TEST_CASE("grouped sum equals per-subset enumeration on random systems") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int s = static_cast<int>(rng() % 8);
        std::vector<Integer> mults;
        for (int i = 0; i < s; ++i) mults.push_back(Integer(static_cast<long>(rng() % 6)));
        const LinearSystem sys = make_system(n, Integer(static_cast<long>(rng() % 7)), mults);
        CHECK(linear_virtual_dim(sys) == virtual_dim_oracle(sys));
    }
}

TEST_CASE("linear expected dimension clamps at -1") {
    const LinearSystem heavy = make_system(2, 1, std::vector<Integer>(6, Integer(1)));
    CHECK(linear_virtual_dim(heavy) == -3);
    CHECK(linear_expected_dim(heavy) == -1);
    const LinearSystem exact = make_system(3, 1, std::vector<Integer>(5, Integer(1)));
    CHECK(linear_virtual_dim(exact) == -1);
    CHECK(linear_expected_dim(exact) == -1);
}

TEST_CASE("hilbert data of the five-point quadric system") {
    const HilbertData h = hilbert(make_system(3, 2, std::vector<Integer>(5, Integer(1))));
    // binom(2t+3, 3) - 5 binom(t+2, 3) = (1/2)t^3 + (3/2)t^2 + 2t + 1
    const QPolynomial expected =
        binomial_poly(2, 3, 3) - binomial_poly(1, 2, 3) * Rational(5);
    CHECK(h.polynomial == expected);
    CHECK(h.polynomial(Integer(1)) == 5);
    CHECK(h.polynomial(Integer(2)) == 15);
    CHECK(h.degree == 3);
    CHECK(h.embedding_dim == 4);
    CHECK(h.s_at_bound);
}

TEST_CASE("hilbert data of the four-point cubic system") {
    const HilbertData h = hilbert(make_system(2, 3, std::vector<Integer>(4, Integer(1))));
    CHECK(h.polynomial(Integer(1)) == 6);
    CHECK(h.degree == 5);
    CHECK(h.embedding_dim == 5);
}

TEST_CASE("hilbert degree of the g = 2 even system") {
    const HilbertData h = hilbert(make_system(4, 5, std::vector<Integer>(6, Integer(3))));
    CHECK(h.degree == 154);
}

TEST_CASE("hilbert rejects too many points and flags the boundary count") {
    CHECK_THROWS_AS(hilbert(make_system(2, 3, std::vector<Integer>(5, Integer(1)))),
                    ValidationError);
    CHECK_FALSE(hilbert(make_system(3, 2, std::vector<Integer>(4, Integer(1)))).s_at_bound);
}

TEST_CASE("sigma and mu systems") {
    CHECK(sigma_system(2) == make_system(3, 2, std::vector<Integer>(5, Integer(1))));
    CHECK(mu_system(1) == make_system(2, 3, std::vector<Integer>(4, Integer(1))));
    CHECK(mu_system(2) == make_system(4, 5, std::vector<Integer>(6, Integer(3))));
    CHECK_THROWS_AS(sigma_system(1), ValidationError);
}

TEST_CASE("closed forms agree with the general path coefficientwise") {
    for (int g = 2; g <= 5; ++g) {
        const HilbertData closed = hilbert_sigma_odd(g);
        const HilbertData general = hilbert(sigma_system(g));
        CHECK(closed.polynomial == general.polynomial);
        CHECK(closed.degree == general.degree);
        CHECK(closed.embedding_dim == general.embedding_dim);
    }
    for (int g = 1; g <= 5; ++g) {
        const HilbertData closed = hilbert_sigma_even(g);
        const HilbertData general = hilbert(mu_system(g));
        CHECK(closed.polynomial == general.polynomial);
        CHECK(closed.degree == general.degree);
    }
}

TEST_CASE("h(0) = 1 and degree = n! * leading coefficient across the corpus") {
    std::vector<HilbertData> corpus;
    for (int g = 2; g <= 5; ++g) corpus.push_back(hilbert_sigma_odd(g));
    for (int g = 1; g <= 5; ++g) corpus.push_back(hilbert_sigma_even(g));
    corpus.push_back(hilbert(make_system(3, 2, std::vector<Integer>(4, Integer(1)))));
    for (const HilbertData& h : corpus) {
        CHECK(h.polynomial(Integer(0)) == 1);
        const int n = h.polynomial.degree();
        CHECK(Rational(h.degree) ==
              h.polynomial.leading() * Rational(factorial(static_cast<unsigned long>(n))));
        CHECK(h.degree > 0);
    }
}

TEST_CASE("derived degree fixtures, two code paths") {
    // frozen after first computation: deg of the g=2 even and g=3 odd models,
    // and h(2) of the g=2 odd model
    CHECK(hilbert_sigma_even(2).degree == 154);
    CHECK(hilbert(mu_system(2)).degree == 154);
    CHECK(hilbert_sigma_odd(3).degree == 40);
    CHECK(hilbert(sigma_system(3)).degree == 40);
    CHECK(hilbert_sigma_odd(2).polynomial(Integer(2)) == 15);
    CHECK(hilbert(sigma_system(2)).polynomial(Integer(2)) == 15);
    // g = 3 embedding checks: h(1) = binom(6,3) - binom(6,1) = 14
    CHECK(hilbert_sigma_odd(3).embedding_dim == 13);
}

TEST_CASE("the scaling law ties virtual dimension to the Hilbert polynomial") {
    std::vector<LinearSystem> corpus = {sigma_system(2), sigma_system(3), mu_system(1),
                                        mu_system(2),    mu_system(3)};
    for (const LinearSystem& sys : corpus) {
        const HilbertData h = hilbert(sys);
        for (long t = 1; t <= 4; ++t)
            CHECK(Rational(linear_virtual_dim(scale(sys, t))) == h.polynomial(Integer(t)));
    }
}

TEST_CASE("kumar systems from the unit polarizations") {
    CHECK(kumar_system(std::vector<Integer>(6, Integer(1))).system ==
          make_system(3, 2, std::vector<Integer>(5, Integer(1))));
    CHECK(kumar_system(std::vector<Integer>(5, Integer(1))).system ==
          make_system(2, 3, std::vector<Integer>(4, Integer(1))));
    // doubling an odd tuple lands in the even branch with the same system
    CHECK(kumar_system(std::vector<Integer>(5, Integer(2))).system ==
          make_system(2, 3, std::vector<Integer>(4, Integer(1))));
}

TEST_CASE("kumar validation and clamping") {
    CHECK_THROWS_AS(kumar_system({Integer(1), Integer(1), Integer(1), Integer(1)}),
                    ValidationError);
    CHECK_THROWS_AS(kumar_system({Integer(9), Integer(1), Integer(1), Integer(1), Integer(1)}),
                    ValidationError);
    CHECK_THROWS_AS(kumar_system({Integer(0), Integer(1), Integer(1), Integer(1), Integer(2)}),
                    ValidationError);
    // b = (4,1,1,1,3): multiplicity 5-4-3 < 0 at the first point, clamped
    const KumarSystem k =
        kumar_system({Integer(4), Integer(1), Integer(1), Integer(1), Integer(3)});
    CHECK(k.clamped);
    CHECK(k.system == make_system(2, 2, {Integer(0), Integer(1), Integer(1), Integer(1)}));
}

TEST_CASE("kumar is invariant under doubling odd tuples") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 50) {
        const int n = 5 + static_cast<int>(rng() % 5);
        std::vector<Integer> b;
        Integer total = 0;
        for (int i = 0; i < n; ++i) {
            b.push_back(Integer(1 + static_cast<long>(rng() % 9)));
            total += b.back();
        }
        if (total % 2 == 0) continue;
        bool valid = true;
        for (const Integer& bi : b)
            if (!(bi < total - bi)) valid = false;
        if (!valid) continue;
        std::vector<Integer> doubled;
        for (const Integer& bi : b) doubled.push_back(2 * bi);
        const KumarSystem kb = kumar_system(b), k2b = kumar_system(doubled);
        CHECK(kb.system == k2b.system);
        CHECK(kb.clamped == k2b.clamped);
        ++done;
    }
}

TEST_CASE("section space dimensions match the closed form") {
    CHECK(section_space_dim_odd(2) == 5);
    CHECK(section_space_dim_odd(3) == 14);
    CHECK(section_space_dim_odd(4) == 42);
    for (int g = 2; g <= 5; ++g) {
        const Integer expected = binomial(2 * g, static_cast<unsigned long>(g)) -
                                 binomial(2 * g, static_cast<unsigned long>(g) - 2);
        CHECK(section_space_dim_odd(g) == expected);
        CHECK(Rational(section_space_dim_odd(g)) ==
              hilbert_sigma_odd(g).polynomial(Integer(1)));
    }
}

TEST_CASE("section relation matrix shapes and full row rank") {
    const QMatrix m2 = section_relation_matrix(2);
    CHECK(m2.row_count() == 1);
    CHECK(m2.cols == 6);
    CHECK(rank(m2) == 1);
    const QMatrix m4 = section_relation_matrix(4);
    CHECK(m4.row_count() == 28);
    CHECK(m4.cols == 70);
    CHECK(rank(m4) == 28);
}

} // TEST_SUITE
