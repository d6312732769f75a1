#pragma once

#include <cstdint>
#include <vector>

#include "frameinv/groebner.hpp"
#include "frameinv/stiefel.hpp"

namespace frameinv {

// Floating-point cross-check of the exact signature pipeline. Advisory only:
// disagreement is a failure of the run, never an override of the exact path.

class OracleError : public Error {
  public:
    explicit OracleError(const std::string& what) : Error(what) {}
};

// A located point's delta or f value was within tolerance of zero, so its
// sign cannot be trusted.
class SignTooCloseToZeroError : public OracleError {
  public:
    explicit SignTooCloseToZeroError(const std::string& what) : OracleError(what) {}
};

// The number of located real points disagrees with the exact count.
class PointCountMismatchError : public OracleError {
  public:
    explicit PointCountMismatchError(const std::string& what) : OracleError(what) {}
};

// The eigenvalue decomposition itself failed.
class EigenSolverError : public OracleError {
  public:
    explicit EigenSolverError(const std::string& what) : OracleError(what) {}
};

struct OracleOptions {
    double tol = 1e-8;        // residual acceptance and sign-guard tolerance
    double merge_tol = 1e-6;  // points closer than this are merged
    std::uint64_t seed = 0;   // seeds the random combination of multiplication matrices
};

struct RealPoint {
    std::vector<double> coords;
    double residual = 0.0; // max |generator(coords)| over the Groebner basis
};

// Real points of V(I) via eigen-decomposition of a random rational
// combination of the multiplication matrices: left eigenvectors of the
// combination are the basis-monomial evaluation vectors of the points, so all
// coordinates are read off simultaneously. Candidates with residual > tol
// are dropped (this removes complex pairs), survivors are Newton-polished and
// merged at merge_tol, and the result is sorted lexicographically by
// coordinates. dim 0 yields no points.
std::vector<RealPoint> solve_real_points(const QuotientAlgebra& algebra,
                                         const OracleOptions& options = {});

// Exact count of distinct real points: the signature of the trace form of 1.
long long count_real_points(const QuotientAlgebra& algebra);

// The invariant recomputed from located points:
//   -1 * sum over points with f(p) > 0 of sgn(delta(p)).
// Refuses (SignTooCloseToZeroError) when any |delta(p)| or |f(p)| <= tol;
// refuses (PointCountMismatchError) when the located-point count disagrees
// with count_real_points.
long long lambda_by_points(const QuotientAlgebra& algebra, const Polynomial& delta_residue,
                           const Polynomial& f, const OracleOptions& options = {});

} // namespace frameinv
