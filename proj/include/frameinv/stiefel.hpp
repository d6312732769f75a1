#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frameinv/groebner.hpp"
#include "frameinv/poly_matrix.hpp"
#include "frameinv/quadform.hpp"

namespace frameinv {

// A polynomial frame A (n rows, k columns, over a ring of n-k+1 variables)
// together with the hypersurface polynomial f whose zero set carries the
// invariant. Requires n-k > 0 and even, k >= 2, f nonzero over the same ring.
struct StiefelProblem {
    PolyMatrix matrix;
    Polynomial f;

    StiefelProblem(PolyMatrix a, Polynomial hypersurface);

    std::size_t n() const { return matrix.rows(); }
    std::size_t k() const { return matrix.cols(); }
};

// Record of the random integer row transform applied when the original pivot
// minor was not invertible in the quotient algebra.
struct TransformRecord {
    std::uint64_t seed = 0;
    unsigned attempts = 0; // number of random transforms tried before success
    std::vector<std::vector<long long>> matrix; // the n x n, det +1 transform used
};

struct HypothesisReport {
    bool zero_dimensional = false;
    std::size_t algebra_dim = 0;
    bool pivot_minor_invertible = false;
    bool theta_delta_nondegenerate = false;
    bool theta_f_delta_nondegenerate = false;
    std::optional<TransformRecord> randomization;
};

class NotZeroDimensionalIdealError : public Error {
  public:
    NotZeroDimensionalIdealError(std::string what, HypothesisReport report)
        : Error(std::move(what)), report(std::move(report)) {}
    HypothesisReport report;
};

class PivotMinorDegenerateError : public Error {
  public:
    PivotMinorDegenerateError(std::string what, HypothesisReport report)
        : Error(std::move(what)), report(std::move(report)) {}
    HypothesisReport report;
};

class DegenerateFormError : public Error {
  public:
    DegenerateFormError(std::string form_name, std::string what, HypothesisReport report)
        : Error(std::move(what)), form_name(std::move(form_name)), report(std::move(report)) {}
    std::string form_name; // "theta_delta" or "theta_f_delta"
    HypothesisReport report;
};

struct StiefelOptions {
    MonomialOrder order = MonomialOrder::Degrevlex;
    std::uint64_t max_spairs = 200000;
    std::uint64_t seed = 0;   // randomized pivot repair
    unsigned retries = 8;     // random row transforms tried after the original pivot fails
};

// Everything the pipeline computes up to (and including) the trace forms;
// shared between hypothesis verification and the invariant computation so the
// Groebner basis and algebra are built exactly once.
struct PipelineData {
    StiefelProblem effective;          // possibly row-transformed problem
    GroebnerBasis gb;                  // basis of the minors ideal (transform-invariant)
    std::shared_ptr<const QuotientAlgebra> algebra;
    Polynomial pivot;                  // pivot minor of the effective matrix
    std::vector<Polynomial> deltas;    // bordered determinants of the effective matrix
    Polynomial delta;                  // Jacobian determinant of the deltas
    Polynomial delta_residue;          // normal form of delta
    Polynomial f_delta_residue;        // normal form of f*delta
    RationalMatrix theta_delta;        // trace form of delta_residue
    RationalMatrix theta_f_delta;      // trace form of f_delta_residue
    Inertia inertia_delta;
    Inertia inertia_f_delta;
    HypothesisReport report;
};

struct VerifiedProblem {
    HypothesisReport report;
    StiefelProblem effective;
    std::shared_ptr<const PipelineData> data; // evidence backing the report
};

struct LambdaReport {
    long long lambda = 0;
    int formula_sign = -1; // the constant sign factor in lambda's formula
    long long signature_delta = 0;
    long long signature_f_delta = 0;
    Inertia inertia_delta;
    Inertia inertia_f_delta;
    std::size_t algebra_dim = 0;
    std::size_t n = 0, k = 0;
    HypothesisReport hypotheses;
    std::shared_ptr<const PipelineData> data; // full evidence (gb, residues, forms)
};

// All size x size minors (row and column subsets in increasing order,
// enumerated lexicographically).
std::vector<Polynomial> minors_of_size(const PolyMatrix& a, std::size_t size);

// All C(n,k) maximal k x k minors, rows chosen in increasing order.
std::vector<Polynomial> minors_ideal(const PolyMatrix& a);

// The (k-1) x (k-1) minor on rows 1..k-1, columns 2..k (for k = 2, the
// single entry a_{12}).
Polynomial pivot_minor(const PolyMatrix& a);

// The bordered determinants Delta_i for i = k..n: det of rows 1..k-1 plus
// row i (all k columns). Exactly n-k+1 polynomials.
std::vector<Polynomial> delta_polynomials(const PolyMatrix& a);

// Jacobian determinant of the deltas with respect to all ring variables.
// Throws ValidationError when the list length differs from the arity.
Polynomial jacobian_delta(const std::vector<Polynomial>& deltas);

// Verifies the theorem's hypotheses: the minors ideal is zero-dimensional,
// and the pivot minor is invertible in the quotient algebra (determinant of
// its multiplication matrix is nonzero). When the pivot check fails, retries
// with seeded random integer row transforms of determinant +1 (products of
// unit-diagonal triangular matrices with entries in [-3,3]); such transforms
// preserve the minors ideal and the invariant. Also builds the two trace
// forms and records their nondegeneracy. Throws NotZeroDimensionalIdealError
// or PivotMinorDegenerateError (after retries are exhausted).
VerifiedProblem verify_hypotheses(const StiefelProblem& problem,
                                  const StiefelOptions& options = {});

// The invariant: lambda = formula_sign * (sig Theta_delta + sig Theta_{f*delta}) / 2
// with formula_sign = -1, over the hypersurface orientation in which the
// gradient of f comes first. Requires both forms nondegenerate
// (DegenerateFormError names the offending form).
LambdaReport lambda(const StiefelProblem& problem, const StiefelOptions& options = {});

// The constant sign factor relating lambda to the half-sum of signatures.
inline constexpr int lambda_formula_sign = -1;

} // namespace frameinv
