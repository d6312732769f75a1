#include "frameinv/stiefel.hpp"

#include <random>
#include <utility>

namespace frameinv {

StiefelProblem::StiefelProblem(PolyMatrix a, Polynomial hypersurface)
    : matrix(std::move(a)), f(std::move(hypersurface)) {
    const std::size_t n = matrix.rows();
    const std::size_t k = matrix.cols();
    if (k < 2) throw ValidationError("k >= 2 is required (the frame needs at least two columns)");
    if (n <= k)
        throw ValidationError("n - k > 0 is required (the frame must have more rows than columns)");
    if ((n - k) % 2 != 0) throw ValidationError("n - k must be even");
    const std::size_t expected_vars = n - k + 1;
    if (!matrix.ring() || matrix.ring()->arity() != expected_vars)
        throw ValidationError("the ring must have exactly n - k + 1 = " +
                              std::to_string(expected_vars) + " variables");
    Polynomial probe = Polynomial::zero(matrix.ring());
    f.require_same_ring(probe);
    if (f.is_zero()) throw ValidationError("the hypersurface polynomial f must be nonzero");
}

std::vector<Polynomial> minors_of_size(const PolyMatrix& a, std::size_t size) {
    if (size == 0 || size > a.rows() || size > a.cols())
        throw ValidationError("minor size out of range");
    std::vector<Polynomial> minors;

    std::vector<std::size_t> row_pick(size), col_pick(size);
    auto choose = [](std::size_t total, std::size_t count, auto&& visit) {
        std::vector<std::size_t> idx(count);
        auto rec = [&](auto&& self, std::size_t level, std::size_t start) -> void {
            if (level == count) {
                visit(idx);
                return;
            }
            for (std::size_t v = start; v + (count - level) <= total; ++v) {
                idx[level] = v;
                self(self, level + 1, v + 1);
            }
        };
        rec(rec, 0, 0);
    };

    choose(a.rows(), size, [&](const std::vector<std::size_t>& rows) {
        choose(a.cols(), size, [&](const std::vector<std::size_t>& cols) {
            minors.push_back(determinant(a.submatrix(rows, cols)));
        });
    });
    return minors;
}

std::vector<Polynomial> minors_ideal(const PolyMatrix& a) {
    if (a.rows() < a.cols()) throw ValidationError("the frame must have at least k rows");
    return minors_of_size(a, a.cols());
}

Polynomial pivot_minor(const PolyMatrix& a) {
    const std::size_t k = a.cols();
    if (k < 2) throw ValidationError("pivot minor requires k >= 2");
    std::vector<std::size_t> rows(k - 1), cols(k - 1);
    for (std::size_t i = 0; i < k - 1; ++i) {
        rows[i] = i;
        cols[i] = i + 1;
    }
    return determinant(a.submatrix(rows, cols));
}

std::vector<Polynomial> delta_polynomials(const PolyMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t k = a.cols();
    if (k < 2) throw ValidationError("bordered determinants require k >= 2");
    if (n < k) throw ValidationError("bordered determinants require n >= k");
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    std::vector<Polynomial> deltas;
    deltas.reserve(n - k + 1);
    for (std::size_t i = k - 1; i < n; ++i) {
        std::vector<std::size_t> rows(k);
        for (std::size_t r = 0; r + 1 < k; ++r) rows[r] = r;
        rows[k - 1] = i;
        deltas.push_back(determinant(a.submatrix(rows, cols)));
    }
    return deltas;
}

Polynomial jacobian_delta(const std::vector<Polynomial>& deltas) {
    if (deltas.empty()) throw ValidationError("at least one bordered determinant is required");
    const RingPtr ring = deltas[0].ring();
    const std::size_t s = ring ? ring->arity() : 0;
    if (deltas.size() != s)
        throw ValidationError("need exactly one bordered determinant per variable (" +
                              std::to_string(s) + "), got " + std::to_string(deltas.size()));
    PolyMatrix jacobian(s, s, ring);
    for (std::size_t i = 0; i < s; ++i) {
        deltas[i].require_same_ring(deltas[0]);
        for (std::size_t j = 0; j < s; ++j) jacobian.at(i, j) = deltas[i].derivative(j);
    }
    return determinant(jacobian);
}

namespace {

// Random integer matrix with determinant +1: a product L*U of unit-diagonal
// triangular matrices with off-diagonal entries in [-3,3].
std::vector<std::vector<long long>> random_unimodular(std::mt19937_64& rng, std::size_t n) {
    auto entry = [&]() { return static_cast<long long>(rng() % 7) - 3; };
    std::vector<std::vector<long long>> lower(n, std::vector<long long>(n, 0));
    std::vector<std::vector<long long>> upper(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for (std::size_t j = 0; j < i; ++j) lower[i][j] = entry();
        for (std::size_t j = i + 1; j < n; ++j) upper[i][j] = entry();
    }
    std::vector<std::vector<long long>> q(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l <= i; ++l) {
            if (lower[i][l] == 0) continue;
            for (std::size_t j = l; j < n; ++j) q[i][j] += lower[i][l] * upper[l][j];
        }
    return q;
}

} // namespace

VerifiedProblem verify_hypotheses(const StiefelProblem& problem, const StiefelOptions& options) {
    HypothesisReport report;

    // The minors ideal is invariant under invertible integer row transforms,
    // so the Groebner basis and the quotient algebra are computed once, from
    // the original matrix, and reused across pivot-repair attempts.
    std::vector<Polynomial> minors = minors_ideal(problem.matrix);
    bool any_nonzero = false;
    for (const auto& m : minors)
        if (!m.is_zero()) {
            any_nonzero = true;
            break;
        }
    if (!any_nonzero)
        throw NotZeroDimensionalIdealError(
            "the minors ideal is the zero ideal (the frame has rank < k everywhere)", report);

    GroebnerOptions gopts;
    gopts.order = options.order;
    gopts.max_spairs = options.max_spairs;
    GroebnerBasis gb = buchberger(minors, gopts);

    if (!is_zero_dimensional(gb))
        throw NotZeroDimensionalIdealError("the minors ideal is not zero-dimensional", report);

    auto algebra = std::make_shared<const QuotientAlgebra>(QuotientAlgebra::build(gb));
    report.zero_dimensional = true;
    report.algebra_dim = algebra->dimension();

    // Pivot invertibility, with seeded randomized repair by determinant +1
    // integer row transforms. The transform changes the pivot minor and the
    // bordered determinants but neither the ideal nor the invariant.
    std::mt19937_64 rng(options.seed);
    PolyMatrix effective_matrix = problem.matrix;
    bool pivot_ok = false;
    if (algebra->dimension() == 0) {
        // Empty variety: invertibility is vacuous.
        pivot_ok = true;
    } else {
        for (unsigned attempt = 0; attempt <= options.retries; ++attempt) {
            std::vector<std::vector<long long>> transform;
            if (attempt == 0) {
                effective_matrix = problem.matrix;
            } else {
                transform = random_unimodular(rng, problem.n());
                effective_matrix = integer_row_transform(transform, problem.matrix);
            }
            Polynomial m = pivot_minor(effective_matrix);
            if (!m.is_zero() &&
                algebra->multiplication_matrix(m).determinant() != 0) {
                pivot_ok = true;
                if (attempt > 0) {
                    TransformRecord record;
                    record.seed = options.seed;
                    record.attempts = attempt;
                    record.matrix = std::move(transform);
                    report.randomization = std::move(record);
                }
                break;
            }
        }
    }
    if (!pivot_ok)
        throw PivotMinorDegenerateError(
            "the pivot minor is not invertible in the quotient algebra (tried " +
                std::to_string(options.retries) + " random row transforms)",
            report);
    report.pivot_minor_invertible = true;

    auto data = std::make_shared<PipelineData>(PipelineData{
        StiefelProblem(effective_matrix, problem.f),
        std::move(gb),
        algebra,
        pivot_minor(effective_matrix),
        delta_polynomials(effective_matrix),
        Polynomial(),
        Polynomial(),
        Polynomial(),
        RationalMatrix(),
        RationalMatrix(),
        Inertia{},
        Inertia{},
        HypothesisReport{}});

    data->delta = jacobian_delta(data->deltas);
    data->delta_residue = normal_form(data->delta, data->gb);
    data->f_delta_residue = normal_form(problem.f * data->delta_residue, data->gb);
    data->theta_delta = trace_form(data->delta_residue, *algebra);
    data->theta_f_delta = trace_form(data->f_delta_residue, *algebra);
    data->inertia_delta = inertia(data->theta_delta);
    data->inertia_f_delta = inertia(data->theta_f_delta);

    report.theta_delta_nondegenerate = (data->inertia_delta.zeros == 0);
    report.theta_f_delta_nondegenerate = (data->inertia_f_delta.zeros == 0);
    data->report = report;

    return VerifiedProblem{report, data->effective, data};
}

LambdaReport lambda(const StiefelProblem& problem, const StiefelOptions& options) {
    VerifiedProblem verified = verify_hypotheses(problem, options);
    const PipelineData& data = *verified.data;

    if (!verified.report.theta_delta_nondegenerate)
        throw DegenerateFormError("theta_delta",
                                  "the trace form of delta is degenerate; the signature formula "
                                  "does not apply",
                                  verified.report);
    if (!verified.report.theta_f_delta_nondegenerate)
        throw DegenerateFormError("theta_f_delta",
                                  "the trace form of f*delta is degenerate; the signature formula "
                                  "does not apply",
                                  verified.report);

    LambdaReport report;
    report.formula_sign = lambda_formula_sign;
    report.signature_delta = data.inertia_delta.signature();
    report.signature_f_delta = data.inertia_f_delta.signature();
    report.inertia_delta = data.inertia_delta;
    report.inertia_f_delta = data.inertia_f_delta;
    report.algebra_dim = data.algebra->dimension();
    report.n = problem.n();
    report.k = problem.k();
    report.hypotheses = verified.report;
    report.data = verified.data;

    const long long sum = report.signature_delta + report.signature_f_delta;
    report.lambda = lambda_formula_sign * sum / 2;
    return report;
}

} // namespace frameinv
