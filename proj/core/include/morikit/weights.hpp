#ifndef MORIKIT_WEIGHTS_HPP
#define MORIKIT_WEIGHTS_HPP

#include "morikit/picard.hpp"
#include "morikit/rational.hpp"

#include <vector>

namespace morikit {

/**
 * A tuple of rational point weights. True Hassett weights satisfy
 * 0 < a_i <= 1 (and sum exactly 2 for the GIT-type quotients); images of
 * divisor classes under phi may leave that range, so the bounds are checked
 * by the operations that need them rather than by the type.
 */
struct WeightVector {
    std::vector<Rational> a;
};

/** GIT polarization: a tuple of n >= 3 positive integers. */
struct Polarization {
    std::vector<Integer> b;
};

Polarization make_polarization(std::vector<Integer> b);

/** All entries in (0, 1]. */
bool is_hassett(const WeightVector& w);
Rational weight_sum(const WeightVector& w);

/**
 * The weight vector of a divisor class on X^m_{m+2}:
 * a_j = (y + x_j) / ((m+1)y + sum x_i) for j <= m+2 and
 * a_{m+3} = 2 - sum of the others. Fails when the denominator vanishes.
 */
WeightVector phi(const DivisorClass& d);

/** a_i = 2 b_i / |b|; the sum is exactly 2. */
WeightVector weights_from_polarization(const Polarization& b);

/**
 * b_i = a_i * M with M the lcm of the reduced denominators. Requires
 * positive rational weights summing to 2; inverse to the conversion above
 * up to overall scale.
 */
Polarization polarization_from_weights(const WeightVector& a);

struct WallSide {
    std::vector<int> I; ///< 1-based, sorted
    int sign = 0;       ///< sign of sum_{i in I} a_i - 1
};

/** Sides of the walls sum_{i in I} a_i = 1 for every 2 <= |I| <= n/2. */
std::vector<WallSide> weight_wall_sides(const WeightVector& w);

struct WallSideGroup {
    int size = 0; ///< |I|
    int sign = 0;
    Integer count; ///< number of subsets of this size on this side
};

/**
 * The wall sides grouped by (|I|, sign), ordered by size then sign. For
 * symmetric weights every size class sits on a single side, so the summary
 * has at most n/2 - 1 rows.
 */
std::vector<WallSideGroup> weight_wall_sides_grouped(const WeightVector& w);

/** Componentwise a_i >= b_i: a reduction between the two weight spaces exists. */
bool reduction_admissible(const WeightVector& a, const WeightVector& b);

} // namespace morikit

#endif
