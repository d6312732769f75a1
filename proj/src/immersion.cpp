#include "frameinv/immersion.hpp"

namespace frameinv {

ImmersionProblem::ImmersionProblem(Polynomial hypersurface, std::vector<Polynomial> components)
    : f(std::move(hypersurface)), g(std::move(components)) {
    if (g.empty()) throw ValidationError("G must have at least one component");
    if (g.size() % 2 != 0)
        throw ValidationError("G must have an even number of components (2m)");
    const std::size_t m = g.size() / 2;
    if (m % 2 != 0)
        throw ValidationError("m must be even (G has 2m components; got m = " +
                              std::to_string(m) + ")");
    if (m < 2) throw ValidationError("m >= 2 is required");
    if (!f.ring() || f.ring()->arity() != m + 1)
        throw ValidationError("the ring must have exactly m + 1 = " + std::to_string(m + 1) +
                              " variables");
    if (f.is_zero()) throw ValidationError("the hypersurface polynomial f must be nonzero");
    for (const auto& gi : g) f.require_same_ring(gi);
}

StiefelProblem build_alpha(const ImmersionProblem& problem) {
    const std::size_t m = problem.m();
    const std::size_t rows = 2 * m + 1;
    const std::size_t cols = m + 1;
    PolyMatrix a(rows, cols, problem.f.ring());
    for (std::size_t j = 0; j < cols; ++j) a.at(0, j) = problem.f.derivative(j);
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < cols; ++j) a.at(i + 1, j) = problem.g[i].derivative(j);
    return StiefelProblem(std::move(a), problem.f);
}

IntersectionReport intersection_number(const ImmersionProblem& problem,
                                       const StiefelOptions& options) {
    IntersectionReport report;
    report.m = problem.m();
    report.lambda_report = lambda(build_alpha(problem), options);
    report.intersection_number = -report.lambda_report.lambda;
    return report;
}

} // namespace frameinv
