#pragma once

#include "tapoly/laurent.hpp"

#include <vector>

namespace tapoly {

// Rectangular matrix of Laurent polynomials over a common ring.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, Ring ring);

    static PolyMatrix identity(int n, Ring ring);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    LaurentPoly& at(int i, int j);
    const LaurentPoly& at(int i, int j) const;

    PolyMatrix with_columns_removed(int start, int count) const;
    PolyMatrix with_rows(const std::vector<int>& row_indices) const;

    // Exact determinant by fraction-free Bareiss elimination (all divisions
    // are exact in the polynomial ring).  Throws on non-square input.
    LaurentPoly det() const;

    bool operator==(const PolyMatrix&) const = default;

private:
    int rows_, cols_;
    Ring ring_;
    std::vector<LaurentPoly> e_;
};

} // namespace tapoly
