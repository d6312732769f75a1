#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frameinv/poly_matrix.hpp"
#include "frameinv/polynomial.hpp"
#include "frameinv/rational.hpp"

namespace frameinv {

// Raised when an ideal that must be zero-dimensional is not.
class NotZeroDimensionalError : public Error {
  public:
    explicit NotZeroDimensionalError(const std::string& what) : Error(what) {}
};

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::Degrevlex;
    // Cap on S-pair reduction steps; exceeding it raises StepLimitError.
    std::uint64_t max_spairs = 200000;
};

// Reduced monic Groebner basis: every S-polynomial reduces to zero against
// the generators, no term of any generator is divisible by the leading term
// of another, leading coefficients are exactly 1. Generators are sorted
// ascending by leading monomial under `order`.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::Degrevlex;
    RingPtr ring;
    std::vector<Polynomial> generators;
};

// Buchberger's algorithm with the coprime-leading-term and chain pruning
// criteria. Requires at least one nonzero generator.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options = {});

// Unique remainder of p modulo the basis: no term of the result is divisible
// by any generator's leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Multivariate division with certificate: p = sum_i quotients[i]*divisors[i]
// + remainder, and no remainder term is divisible by any divisor's leading
// term.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      MonomialOrder order);

// True iff for every ring variable some generator's leading monomial is a
// pure power of it (a constant generator covers every variable).
bool is_zero_dimensional(const GroebnerBasis& gb);

// The finite-dimensional quotient algebra A = Q[x]/I for a zero-dimensional
// ideal: standard-monomial basis (ascending under the basis order, so
// basis[0] == 1 whenever dim > 0), one multiplication matrix per variable,
// cached multiplication matrices for every basis monomial, and the trace
// functional T(h) = trace of multiplication by h.
class QuotientAlgebra {
  public:
    // Throws NotZeroDimensionalError unless is_zero_dimensional(gb).
    static QuotientAlgebra build(GroebnerBasis gb);

    std::size_t dimension() const { return basis_.size(); }
    const GroebnerBasis& groebner_basis() const { return gb_; }
    const RingPtr& ring() const { return gb_.ring; }
    MonomialOrder order() const { return gb_.order; }
    const std::vector<Monomial>& basis() const { return basis_; }

    // Coordinates of normal_form(p) in the standard-monomial basis.
    std::vector<Rational> coordinates(const Polynomial& p) const;

    // Multiplication-by-x_v matrix (column j = coordinates of x_v * b_j).
    const RationalMatrix& variable_matrix(std::size_t var_index) const;
    // Multiplication-by-b_i matrix.
    const RationalMatrix& basis_matrix(std::size_t basis_index) const;
    // Multiplication-by-h matrix.
    RationalMatrix multiplication_matrix(const Polynomial& h) const;

    // T(b_i) for each basis monomial.
    const std::vector<Rational>& trace_vector() const { return traces_; }
    // T(h): exact trace of multiplication by h.
    Rational trace_of(const Polynomial& h) const;

  private:
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::vector<RationalMatrix> var_matrices_;
    std::vector<RationalMatrix> basis_matrices_;
    std::vector<Rational> traces_;
};

// Free-function views matching the operation names used elsewhere.
QuotientAlgebra quotient_algebra(GroebnerBasis gb);
Rational trace_of(const Polynomial& h, const QuotientAlgebra& algebra);

} // namespace frameinv
