#pragma once

#include <cstddef>
#include <string>

#include "frameinv/groebner.hpp"
#include "frameinv/rational.hpp"

namespace frameinv {

// Exact eigenvalue-sign counts of a symmetric rational matrix.
struct Inertia {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t zeros = 0;

    long long signature() const {
        return static_cast<long long>(positives) - static_cast<long long>(negatives);
    }
    std::size_t rank() const { return positives + negatives; }

    bool operator==(const Inertia& other) const {
        return positives == other.positives && negatives == other.negatives && zeros == other.zeros;
    }
    bool operator!=(const Inertia& other) const { return !(*this == other); }
};

// The trace form Theta_h on the quotient algebra: entry (i,j) = T(h*b_i*b_j).
// Exact, symmetric, dimension = dim A.
RationalMatrix trace_form(const Polynomial& h, const QuotientAlgebra& algebra);

// Inertia by exact symmetric congruence diagonalization: diagonal pivots with
// Schur-complement elimination; when the remaining block has an all-zero
// diagonal, an off-diagonal hyperbolic pair contributes (+1,-1). The 0x0 form
// has inertia (0,0,0). Throws ValidationError unless the matrix is symmetric.
Inertia inertia(const RationalMatrix& form);

// True iff the exact determinant is nonzero (equivalently: inertia has no
// zero eigenvalues).
bool is_nondegenerate(const RationalMatrix& form);

} // namespace frameinv
