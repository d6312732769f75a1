#pragma once

#include <vector>

#include "frameinv/stiefel.hpp"

namespace frameinv {

// A polynomial map G = (g_1,...,g_2m) restricted to the hypersurface
// M = f^{-1}(0) in R^{m+1}, with m even and m >= 2. All polynomials share
// one ring of m+1 variables.
struct ImmersionProblem {
    Polynomial f;
    std::vector<Polynomial> g;

    ImmersionProblem(Polynomial hypersurface, std::vector<Polynomial> components);

    std::size_t m() const { return g.size() / 2; }
};

// The Jacobian frame: the (2m+1) x (m+1) matrix whose first row is the
// gradient of f and whose row i+1 is the gradient of g_i. The returned
// problem shares f; n = 2m+1, k = m+1, n-k = m.
StiefelProblem build_alpha(const ImmersionProblem& problem);

struct IntersectionReport {
    long long intersection_number = 0;
    std::size_t m = 0;
    LambdaReport lambda_report;
};

// Whitney intersection number of g = G|M, computed as the negative of the
// frame invariant of build_alpha(problem). A DegenerateFormError from the
// frame pipeline means the immersion property itself is uncertified.
IntersectionReport intersection_number(const ImmersionProblem& problem,
                                       const StiefelOptions& options = {});

} // namespace frameinv
