#ifndef MORIKIT_FACTS_HPP
#define MORIKIT_FACTS_HPP

#include "morikit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace morikit {

struct GPlaneFamily {
    std::string name; ///< "span"/"exceptional" (odd m), "C"/"D" (even m)
    Integer count;
};

/**
 * Biregular invariants of the quotient of m+3 points on the line with the
 * symmetric polarization, as closed-form data. Odd m = 2g-1: the quotient is
 * singular, Picard rank 1, class group rank 2g+2, canonical class -2 times
 * the hyperplane class. Even m = 2g: smooth, Picard rank 2g+3, canonical
 * multiple -1. The automorphism group is the symmetric group on m+3 letters
 * in both cases; degree and embedding dimension come from the Hilbert data.
 */
struct FactSheet {
    int m = 2;
    std::string parity;
    int g = 1;
    int canonical_multiple = -1;
    Integer pic_rank;
    std::optional<Integer> class_group_rank; ///< odd m only
    Integer singular_count;                  ///< 0 for even m
    std::optional<Integer> sing_multiplicity; ///< odd m only: (2g-2)!/((g-1)!)^2
    std::vector<GPlaneFamily> gplane_counts;
    std::optional<Integer> distinguished_points; ///< even m only: (2g+3)!/(2((g+1)!)^2)
    Integer aut_order; ///< (m+3)!
    Integer degree;
    Integer embedding_dim;
};

FactSheet facts(int m);

} // namespace morikit

#endif
