#include "morikit/facts.hpp"

#include "morikit/errors.hpp"
#include "morikit/linear_systems.hpp"

namespace morikit {

FactSheet facts(int m) {
    if (m < 2) throw ValidationError("facts needs m >= 2");
    FactSheet f;
    f.m = m;
    f.aut_order = factorial(static_cast<unsigned long>(m) + 3);
    if (m % 2 == 1) {
        const int g = (m + 1) / 2;
        const unsigned long ug = static_cast<unsigned long>(g);
        f.parity = "odd";
        f.g = g;
        f.canonical_multiple = -2;
        f.pic_rank = 1;
        f.class_group_rank = Integer(2 * g + 2);
        f.singular_count = binomial(Integer(2 * g + 1), ug);
        f.sing_multiplicity = factorial(2 * ug - 2) / (factorial(ug - 1) * factorial(ug - 1));
        f.gplane_counts = {{"span", binomial(Integer(2 * g + 1), ug + 1)},
                           {"exceptional", Integer(2 * g + 1)}};
        const HilbertData h = hilbert_sigma_odd(g);
        f.degree = h.degree;
        f.embedding_dim = h.embedding_dim;
    } else {
        const int g = m / 2;
        const unsigned long ug = static_cast<unsigned long>(g);
        f.parity = "even";
        f.g = g;
        f.canonical_multiple = -1;
        f.pic_rank = Integer(2 * g + 3);
        f.singular_count = 0;
        f.gplane_counts = {{"C", binomial(Integer(2 * g + 2), ug + 1)},
                           {"D", binomial(Integer(2 * g + 2), ug)}};
        f.distinguished_points =
            factorial(2 * ug + 3) / (2 * factorial(ug + 1) * factorial(ug + 1));
        const HilbertData h = hilbert_sigma_even(g);
        f.degree = h.degree;
        f.embedding_dim = h.embedding_dim;
    }
    return f;
}

} // namespace morikit
