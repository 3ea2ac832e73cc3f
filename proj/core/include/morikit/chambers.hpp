#ifndef MORIKIT_CHAMBERS_HPP
#define MORIKIT_CHAMBERS_HPP

#include "morikit/cones.hpp"
#include "morikit/picard.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace morikit {

// Cones of divisors on X^m_{m+2} in coordinates (y, x_1..x_{m+2}); the
// ambient dimension is always m+3.

enum class WallKind { A, B };

/**
 * One hyperplane of the chamber arrangement on Eff(X^m_{m+2}):
 *   kind A (|I| = k-1):  (2-k)y - sum_{i in I} x_i
 *   kind B (|I| = k):    (m-k+1)y - sum_{i in I} x_i + sum_{i=1..m+2} x_i
 * for 2 <= k <= (m+3)/2. Normals are oriented so the anticanonical class
 * evaluates nonnegatively; its value on a level-k wall is m - 2k + 3, so
 * the as-written orientation already qualifies and only the top level of an
 * odd-dimensional model evaluates to zero.
 */
struct Wall {
    int k = 2;
    WallKind kind = WallKind::A;
    std::vector<int> I; ///< 1-based, sorted
    QVector normal;     ///< length m+3
};

/** All walls for 2 <= k <= (m+3)/2, ordered by (k, kind, lexicographic I). */
std::vector<Wall> walls(int m);

/** Eff(X^m_{m+2}) by inequalities: y + x_i >= 0 and m*y + sum x_i >= 0. */
HCone eff_cone(int m);

/** Generators {E_i} and {H - sum_{i in I} E_i : |I| = m}, canonicalized. */
VCone eff_generators(int m);

/**
 * Mov(X^m_{m+2}): the |I| = 2 walls (m-1)y - sum_I x_i + sum x_i >= 0,
 * the inequalities x_i <= 0, and the Eff inequalities, deduplicated.
 */
HCone mov_cone(int m);

/** Nef(X^m_{m+2}): x_i <= 0 and y + x_i + x_j >= 0. */
HCone nef_cone(int m);

/**
 * Even m = 2g: the chamber of the anticanonical class, cut out by the
 * level k = g+1 walls; -K is interior to it.
 */
HCone fano_chamber(int m);

/** Odd m = 2g-1: the level k = g+1 walls, on all of which -K vanishes. */
std::vector<Wall> fano_locus(int m);

/**
 * Membership report for a divisor class on X^m_{m+2}. For odd m the Fano
 * locus is a linear subspace, so in_fano is Boundary (on every locus wall)
 * or Outside, never Interior.
 */
struct ChamberReport {
    PointClass in_eff;
    PointClass in_mov;
    PointClass in_nef;
    PointClass in_fano;
    std::vector<Wall> active_walls;   ///< walls vanishing on the divisor
    std::vector<Wall> violated_walls; ///< walls negative on the divisor
};

ChamberReport locate_divisor(const DivisorClass& d);

/**
 * Crossing a level-k wall (k >= 3) flips a P^(k-2) into a P^(m+1-k);
 * returns that dimension pair. Level-2 walls bound the movable cone and are
 * divisorial, so they have no flip type.
 */
std::pair<int, int> flip_type(const Wall& w, int m);

/** One step of the factorization of X^{2g}_{2g+2} --> Fano model. */
struct FlipStage {
    int stage = 1;        ///< i = 1..g-1
    int center_dim = 1;   ///< i
    Integer center_count; ///< binom(2g+2, i+1)
    int inserted_dim = 0; ///< 2g-1-i
};

std::vector<FlipStage> flip_sequence(int g);

/** An extremal curve ray of the Fano model, tagged by its chamber wall. */
struct NeRay {
    QVector curve; ///< coordinates (a, c_1..c_{2g+2})
    Wall wall;
    char family = 'C'; ///< 'C' span family (kind B), 'D' flipped-plane family (kind A)
};

struct NeExtremalRays {
    Integer count; ///< binom(2g+3, g+1)
    std::vector<NeRay> rays; ///< enumerated for g <= 2, empty otherwise
};

/**
 * Extremal rays of the Mori cone of the Fano model: count is always
 * binom(2g+3, g+1); for g <= 2 the rays are computed as the dual of the
 * Fano chamber under the intersection pairing and checked against the count.
 */
NeExtremalRays ne_extremal_rays(int g, const ConeOptions& options = {});

struct MovingRay {
    QVector curve; ///< coordinates (a, c_1..c_{2g+2})
    std::string label;
};

/**
 * The dual of eff_cone(2g) under the intersection pairing: exactly 2g+3
 * rays, the lines through each blown-up point and the degree-2g rational
 * normal curve through all of them.
 */
std::vector<MovingRay> moving_curve_rays(int g, const ConeOptions& options = {});

/** Transport of a divisor-space functional to curve coordinates (negates the e part). */
QVector functional_to_curve(const QVector& normal);

} // namespace morikit

#endif
