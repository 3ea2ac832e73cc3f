#ifndef MORIKIT_CONES_HPP
#define MORIKIT_CONES_HPP

#include "morikit/qvector.hpp"

#include <cstddef>
#include <vector>

namespace morikit {

/**
 * Polyhedral cone over Q by inequalities: {x : n.x >= 0 for every normal n}.
 * Normals are stored canonicalized (integer-primitive, sign kept), with
 * duplicates removed, in lexicographic order. Equality constraints are
 * expressed as opposing normal pairs.
 */
struct HCone {
    int ambient_dim = 0;
    std::vector<QVector> normals;
};

/**
 * Polyhedral cone over Q by generators: span(lineality) + cone(rays).
 * Rays are extreme modulo the lineality space, integer-primitive, pairwise
 * non-proportional and sorted; the lineality list is a reduced basis.
 */
struct VCone {
    int ambient_dim = 0;
    std::vector<QVector> rays;
    std::vector<QVector> lineality;
};

/** Canonicalizing constructor: scales, deduplicates and sorts the normals. */
HCone make_hcone(int ambient_dim, std::vector<QVector> normals);

struct ConeOptions {
    /** Abort with ResourceLimitError when an intermediate ray set grows past this. */
    std::size_t ray_cap = 2'000'000;
};

/**
 * H-to-V conversion by the double description method: normals are inserted
 * in their (lexicographic) stored order, new rays come only from adjacent
 * pairs, and adjacency is decided by the rank of the common active normal
 * set. Output is canonical: rays sorted lexicographically, lineality in
 * reduced echelon form, so the result does not depend on input order.
 */
VCone h_to_v(const HCone& cone, const ConeOptions& options = {});

/** V-to-H conversion (irredundant facet normals plus +-pairs for the span). */
HCone v_to_h(const VCone& cone, const ConeOptions& options = {});

/**
 * Dual cone {y : y.x >= 0 for all x in the cone} under the standard dot
 * product. Callers that need a different pairing transform coordinates
 * before and after; the engine itself is geometry-agnostic.
 */
VCone dual(const HCone& cone, const ConeOptions& options = {});
HCone dual(const VCone& cone);

enum class Side { Interior, Boundary, Outside };

struct PointClass {
    Side side = Side::Interior;
    std::vector<std::size_t> active;   ///< normals with n.v = 0 (when not Outside: the full active set)
    std::vector<std::size_t> violated; ///< normals with n.v < 0
};

/**
 * Classifies v against the cone: Interior when every normal is strictly
 * positive on v, Boundary when all are nonnegative and some vanish,
 * Outside otherwise. Indices refer to the cone's stored normal order.
 */
PointClass classify_point(const HCone& cone, const QVector& v);

/** True when v satisfies every inequality (Interior or Boundary). */
bool contains(const HCone& cone, const QVector& v);

} // namespace morikit

#endif
