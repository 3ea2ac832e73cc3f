#ifndef MORIKIT_QMATRIX_HPP
#define MORIKIT_QMATRIX_HPP

#include "morikit/qvector.hpp"

#include <cstddef>
#include <vector>

namespace morikit {

/** Rectangular matrix of exact rationals, stored by rows. */
struct QMatrix {
    std::vector<QVector> rows;
    std::size_t cols = 0;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r, QVector(c)), cols(c) {}
    explicit QMatrix(std::vector<QVector> rs);

    std::size_t row_count() const { return rows.size(); }
};

/** Exact rank over the rationals. */
std::size_t rank(const QMatrix& m);

/**
 * Basis of the right kernel {v : Mv = 0}, read off the reduced echelon form.
 * Vectors are canonicalized (denominators cleared, gcd 1, first nonzero entry
 * positive) and ordered by free column. Size = cols - rank(M).
 */
std::vector<QVector> kernel_basis(const QMatrix& m);

/** M * v. */
QVector apply(const QMatrix& m, const QVector& v);

/**
 * In-place Gauss-Jordan reduction. Pivoting is deterministic: first nonzero
 * column, then the row whose pivot entry has the smallest combined
 * numerator/denominator bit length (lowest row index on ties), which keeps
 * coefficient growth down. Returns the pivot columns.
 */
std::vector<std::size_t> reduced_row_echelon(QMatrix& m);

} // namespace morikit

#endif
