#include "tapoly/polymat.hpp"

namespace tapoly {

PolyMatrix::PolyMatrix(int rows, int cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), e_(static_cast<size_t>(rows) * cols, LaurentPoly(ring)) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimensions");
}

PolyMatrix PolyMatrix::identity(int n, Ring ring) {
    PolyMatrix m(n, n, ring);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(ring);
    return m;
}

LaurentPoly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const LaurentPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

PolyMatrix PolyMatrix::with_columns_removed(int start, int count) const {
    if (start < 0 || count < 0 || start + count > cols_) throw error("column range out of bounds");
    PolyMatrix m(rows_, cols_ - count, ring_);
    for (int i = 0; i < rows_; ++i) {
        int jj = 0;
        for (int j = 0; j < cols_; ++j) {
            if (j >= start && j < start + count) continue;
            m.at(i, jj++) = at(i, j);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::with_rows(const std::vector<int>& row_indices) const {
    PolyMatrix m(static_cast<int>(row_indices.size()), cols_, ring_);
    for (size_t i = 0; i < row_indices.size(); ++i) {
        int r = row_indices[i];
        if (r < 0 || r >= rows_) throw error("row index out of range");
        for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(i), j) = at(r, j);
    }
    return m;
}

LaurentPoly PolyMatrix::det() const {
    if (rows_ != cols_) throw error("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return LaurentPoly::one(ring_);

    std::vector<LaurentPoly> m = e_;
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };

    bool negate = false;
    LaurentPoly prev = LaurentPoly::one(ring_);
    for (int k = 0; k + 1 < n; ++k) {
        // pivot: first row at or below k with nonzero entry in column k
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!m[idx(r, k)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return LaurentPoly::zero(ring_);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m[idx(k, j)], m[idx(pivot, j)]);
            negate = !negate;
        }
        const LaurentPoly piv = m[idx(k, k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m[idx(i, j)] * piv - m[idx(i, k)] * m[idx(k, j)];
                m[idx(i, j)] = exact_div(num, prev);
            }
            m[idx(i, k)] = LaurentPoly::zero(ring_);
        }
        prev = piv;
    }
    LaurentPoly d = m[idx(n - 1, n - 1)];
    return negate ? -d : d;
}

} // namespace tapoly
