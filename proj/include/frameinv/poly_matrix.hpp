#pragma once

#include <vector>

#include "frameinv/polynomial.hpp"

namespace frameinv {

// Rectangular matrix of polynomials over one shared ring (row-major).
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr& ring() const { return ring_; }

    Polynomial& at(std::size_t r, std::size_t c);
    const Polynomial& at(std::size_t r, std::size_t c) const;

    // Submatrix picking the given rows/columns in the given order.
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const;

    bool operator==(const PolyMatrix& other) const;
    bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

  private:
    std::size_t rows_, cols_;
    RingPtr ring_;
    std::vector<Polynomial> entries_;
};

// Exact determinant of a square polynomial matrix: cofactor expansion up to
// dimension 4, fraction-free Bareiss elimination (with exact polynomial
// divisions) above that. Throws ValidationError on non-square input.
Polynomial determinant(const PolyMatrix& m);

// Left product by a square integer matrix: rows of the result are integer
// combinations of the rows of a.
PolyMatrix integer_row_transform(const std::vector<std::vector<long long>>& q,
                                 const PolyMatrix& a);

// Exact quotient p / d for a division known to be remainder-free (used by the
// Bareiss recurrence). Throws ValidationError if the division is not exact.
Polynomial exact_divide(const Polynomial& p, const Polynomial& d);

} // namespace frameinv
