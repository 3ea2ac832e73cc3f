#ifndef MORIKIT_LINEAR_SYSTEMS_HPP
#define MORIKIT_LINEAR_SYSTEMS_HPP

#include "morikit/qmatrix.hpp"
#include "morikit/qpolynomial.hpp"
#include "morikit/rational.hpp"

#include <vector>

namespace morikit {

/**
 * The linear system L_{n,d}(m_1,...,m_s) of degree-d hypersurfaces of P^n
 * with multiplicity m_i at the i-th of s general points.
 */
struct LinearSystem {
    int n = 1;
    Integer d;
    std::vector<Integer> mults;

    int s() const { return static_cast<int>(mults.size()); }
    bool operator==(const LinearSystem& o) const {
        return n == o.n && d == o.d && mults == o.mults;
    }
};

LinearSystem make_system(int n, Integer d, std::vector<Integer> mults);

/** max(sum_{i in I} m_i - r*d, 0) for the index subset I (1-based), r = |I|-1. */
Integer k_value(const LinearSystem& sys, const std::vector<int>& I);

/**
 * The alternating sum binom(n+d, d) + sum_r sum_{|I|=r+1} (-1)^{r+1}
 * binom(n + k_I - r - 1, n), with binom(a, n) = 0 whenever a < n.
 * Subsets are grouped by multiplicity sum, so symmetric systems cost
 * polynomial time instead of 2^s; terms are added in (r, sum) order.
 */
Integer linear_virtual_dim(const LinearSystem& sys);

/** max(linear_virtual_dim, -1); no containment test is applied. */
Integer linear_expected_dim(const LinearSystem& sys);

struct HilbertData {
    QPolynomial polynomial;  ///< h(t); h(0) = 1
    Integer degree;          ///< = n! * leading coefficient
    Integer embedding_dim;   ///< N = h(1) - 1
    bool s_at_bound = false; ///< set when s = n+2, the largest point count covered
};

/**
 * Hilbert polynomial and degree of the image of the rational map given by
 * the system: h(t) = binom(dt+n, n) + sum (-1)^{r+1} binom(n + t*k - r - 1, n)
 * over subset classes with k > 0, and degree d^n + sum (-1)^{r+1} k^n.
 * Requires s <= n+2. Degree and n! * leading coefficient are computed by
 * separate routes and must agree.
 */
HilbertData hilbert(const LinearSystem& sys);

/** L_{2g-1, g}((g-1)^{2g+1}), g >= 2. */
LinearSystem sigma_system(int g);
/** L_{2g, 2g+1}((2g-1)^{2g+2}), g >= 1. */
LinearSystem mu_system(int g);

/** Closed form for hilbert(sigma_system(g)); an independent code path. */
HilbertData hilbert_sigma_odd(int g);
/** Closed form for hilbert(mu_system(g)); an independent code path. */
HilbertData hilbert_sigma_even(int g);

struct KumarSystem {
    LinearSystem system;
    bool clamped = false; ///< some computed multiplicity was negative and set to 0
};

/**
 * The linear system on P^(n-3) realizing the quotient of n points with
 * polarization b. Requires n >= 5 and b_i < sum_{j != i} b_j. Even |b| = 2B:
 * degree B - b_n, multiplicities B - b_i - b_n at the first n-1 points.
 * Odd |b|: degree |b| - 2*b_n, multiplicities |b| - 2*b_i - 2*b_n, which
 * equals the even case of the doubled tuple.
 */
KumarSystem kumar_system(const std::vector<Integer>& b);

/**
 * Inclusion matrix with columns the g-subsets and rows the (g-2)-subsets of
 * {1..2g}, entry 1 when the row subset is contained in the column subset.
 */
QMatrix section_relation_matrix(int g);

/**
 * Dimension of the solution space of the section relations: column count
 * minus the rank of section_relation_matrix(g). Equals binom(2g, g) -
 * binom(2g, g-2), and h(1) of hilbert_sigma_odd(g).
 */
Integer section_space_dim_odd(int g);

} // namespace morikit

#endif
