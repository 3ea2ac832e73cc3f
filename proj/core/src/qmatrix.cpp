#include "morikit/qmatrix.hpp"

#include "morikit/errors.hpp"

#include <algorithm>

namespace morikit {

QMatrix::QMatrix(std::vector<QVector> rs) : rows(std::move(rs)) {
    cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("matrix rows have unequal lengths");
}

static std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

std::vector<std::size_t> reduced_row_echelon(QMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.row_count(); ++col) {
        std::size_t best = m.row_count();
        for (std::size_t r = pivot_row; r < m.row_count(); ++r) {
            if (m.rows[r][col] == 0) continue;
            if (best == m.row_count() || bit_size(m.rows[r][col]) < bit_size(m.rows[best][col]))
                best = r;
        }
        if (best == m.row_count()) continue;
        std::swap(m.rows[pivot_row], m.rows[best]);
        const Rational inv = 1 / m.rows[pivot_row][col];
        for (std::size_t c = col; c < m.cols; ++c) m.rows[pivot_row][c] *= inv;
        for (std::size_t r = 0; r < m.row_count(); ++r) {
            if (r == pivot_row || m.rows[r][col] == 0) continue;
            const Rational f = m.rows[r][col];
            for (std::size_t c = col; c < m.cols; ++c)
                m.rows[r][c] -= f * m.rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

std::size_t rank(const QMatrix& m) {
    QMatrix work = m;
    return reduced_row_echelon(work).size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
    QMatrix work = m;
    const std::vector<std::size_t> pivots = reduced_row_echelon(work);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(m.cols);
        v[free_col] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -work.rows[p][free_col];
        basis.push_back(primitive_signed(v));
    }
    return basis;
}

QVector apply(const QMatrix& m, const QVector& v) {
    if (v.size() != m.cols) throw ValidationError("matrix/vector size mismatch");
    QVector r(m.row_count());
    for (std::size_t i = 0; i < m.row_count(); ++i) r[i] = dot(m.rows[i], v);
    return r;
}

} // namespace morikit
