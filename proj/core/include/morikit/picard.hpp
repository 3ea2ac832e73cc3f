#ifndef MORIKIT_PICARD_HPP
#define MORIKIT_PICARD_HPP

#include "morikit/qvector.hpp"
#include "morikit/rational.hpp"

#include <vector>

namespace morikit {

/** The blow-up X^m_s of P^m at s general points. */
struct BlowupModel {
    int m = 2; ///< dimension of the ambient projective space, >= 2
    int s = 1; ///< number of blown-up points, >= 1

    bool operator==(const BlowupModel& o) const { return m == o.m && s == o.s; }
};

BlowupModel make_model(int m, int s);

/**
 * Divisor class y*H + sum x_i*E_i on X^m_s. Effective exceptional classes
 * have x_i > 0; the multiplicity view of a strict transform is m_i = -x_i.
 */
struct DivisorClass {
    BlowupModel model;
    Rational y;
    std::vector<Rational> x; ///< length s

    /** Coordinates (y, x_1..x_s) as one vector of length s+1. */
    QVector coords() const;
};

/** Curve class a*l + sum c_i*e_i on X^m_s, l the pull-back of a general line. */
struct CurveClass {
    BlowupModel model;
    Rational a;
    std::vector<Rational> c; ///< length s

    QVector coords() const;
};

DivisorClass make_divisor(const BlowupModel& model, Rational y, std::vector<Rational> x);
CurveClass make_curve(const BlowupModel& model, Rational a, std::vector<Rational> c);
DivisorClass divisor_from_coords(const BlowupModel& model, const QVector& coords);

/** Intersection pairing: H.l = 1, E_i.e_i = -1, mixed products 0. */
Rational intersect(const DivisorClass& d, const CurveClass& c);

/** The convenience Cremona base {1, ..., m+1}. */
std::vector<int> default_cremona_base(const BlowupModel& model);

/**
 * Push-forward of a divisor class under the standard Cremona transformation
 * centered at the m+1 base points (1-based indices). In the multiplicity
 * view d = y, m_i = -x_i: the image has degree d*m - sum_{i in base} m_i and
 * multiplicity d*(m-1) - sum_{j in base, j != i} m_j at each base point;
 * multiplicities off the base are unchanged, the map being an isomorphism
 * near points away from the coordinate simplex. An involution for any base.
 */
DivisorClass cremona_pushforward(const DivisorClass& d, const std::vector<int>& base);

/** -K = (m+1)H - (m-1) sum E_i, i.e. y = m+1, x_i = -(m-1). */
DivisorClass anticanonical(const BlowupModel& model);

/**
 * On X^{2g-1}_{2g+1}: the binom(2g+1, g) classes (g-1)l - e_{i_1} - ... - e_{i_g}
 * of the contracted rational normal curves, ordered by index subset. Each is
 * orthogonal to the polarization class (g; -(g-1), ..., -(g-1)) and together
 * they span a hyperplane (rank 2g+1) in the curve lattice.
 */
std::vector<CurveClass> contracted_rnc_classes(int g);

/**
 * Picard rank 1 + sum_{j=0..c} binom(s, j+1) of the iterated blow-up of P^m
 * along all centers of dimension <= c spanned by the s points.
 */
Integer picard_rank_stage(int s, int c);

} // namespace morikit

#endif
