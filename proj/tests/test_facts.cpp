#include "morikit/errors.hpp"
#include "morikit/facts.hpp"
#include "morikit/linear_systems.hpp"

#include "doctest.h"

using namespace morikit;

namespace {

Integer family_count(const FactSheet& f, const std::string& name) {
    for (const auto& fam : f.gplane_counts)
        if (fam.name == name) return fam.count;
    FAIL("missing g-plane family ", name);
    return 0;
}

} // namespace

TEST_SUITE("facts") {

TEST_CASE("the three-fold sheet") {
    const FactSheet f = facts(3);
    CHECK(f.parity == "odd");
    CHECK(f.g == 2);
    CHECK(f.singular_count == 10);
    CHECK(*f.sing_multiplicity == 2);
    CHECK(f.aut_order == 720);
    CHECK(f.canonical_multiple == -2);
    CHECK(f.pic_rank == 1);
    CHECK(*f.class_group_rank == 6);
    CHECK(f.degree == 3);
    CHECK(f.embedding_dim == 4);
    CHECK(family_count(f, "span") == 10);
    CHECK(family_count(f, "exceptional") == 5);
    CHECK_FALSE(f.distinguished_points.has_value());
}

TEST_CASE("the surface sheet") {
    const FactSheet f = facts(2);
    CHECK(f.parity == "even");
    CHECK(f.degree == 5);
    CHECK(f.embedding_dim == 5);
    CHECK(f.aut_order == 120);
    CHECK(f.pic_rank == 5);
    CHECK(f.singular_count == 0);
    CHECK(f.canonical_multiple == -1);
    CHECK(family_count(f, "C") == 6);
    CHECK(family_count(f, "D") == 4);
    CHECK(*f.distinguished_points == 15);
    CHECK_FALSE(f.class_group_rank.has_value());
    CHECK_FALSE(f.sing_multiplicity.has_value());
}

TEST_CASE("the five-fold sheet") {
    const FactSheet f = facts(5);
    CHECK(f.singular_count == 35);
    CHECK(*f.sing_multiplicity == 6);
    CHECK(*f.class_group_rank == 8);
    CHECK(f.aut_order == factorial(8));
    CHECK(f.degree == hilbert_sigma_odd(3).degree);
}

TEST_CASE("odd multiplicity equals the central binomial of the Segre product") {
    for (int g = 2; g <= 8; ++g) {
        const FactSheet f = facts(2 * g - 1);
        CHECK(*f.sing_multiplicity == binomial(2 * g - 2, static_cast<unsigned long>(g) - 1));
    }
}

TEST_CASE("even distinguished points pair the span family with its complements") {
    for (int g = 1; g <= 8; ++g) {
        const FactSheet f = facts(2 * g);
        Integer c = 0;
        for (const auto& fam : f.gplane_counts)
            if (fam.name == "C") c = fam.count;
        CHECK(2 * *f.distinguished_points == c * (2 * (g + 2) - 1));
    }
}

TEST_CASE("automorphism order is (m+3)! throughout") {
    for (int m = 2; m <= 12; ++m)
        CHECK(facts(m).aut_order == factorial(static_cast<unsigned long>(m) + 3));
    CHECK_THROWS_AS(facts(1), ValidationError);
}

TEST_CASE("degree and embedding dimension agree with the Hilbert data") {
    for (int m = 2; m <= 9; ++m) {
        const FactSheet f = facts(m);
        const HilbertData h =
            m % 2 == 1 ? hilbert_sigma_odd((m + 1) / 2) : hilbert_sigma_even(m / 2);
        CHECK(f.degree == h.degree);
        CHECK(f.embedding_dim == h.embedding_dim);
    }
}

} // TEST_SUITE
