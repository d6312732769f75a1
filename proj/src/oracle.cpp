#include "frameinv/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "frameinv/quadform.hpp"

namespace frameinv {

namespace {

std::string point_to_string(const std::vector<double>& coords) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

double residual_at(const std::vector<Polynomial>& gens, const std::vector<double>& coords) {
    double r = 0.0;
    for (const auto& g : gens) r = std::max(r, std::abs(g.evaluate_double(coords)));
    return r;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Newton least-squares polish of a candidate root of the generator system.
std::vector<double> polish(const std::vector<Polynomial>& gens,
                           const std::vector<std::vector<Polynomial>>& jacobian,
                           std::vector<double> x) {
    const std::size_t rows = gens.size();
    const std::size_t colsn = x.size();
    std::vector<double> best = x;
    double best_res = residual_at(gens, x);
    for (int iter = 0; iter < 30; ++iter) {
        Eigen::VectorXd r(rows);
        for (std::size_t i = 0; i < rows; ++i) r(static_cast<Eigen::Index>(i)) = gens[i].evaluate_double(x);
        Eigen::MatrixXd j(rows, colsn);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < colsn; ++c)
                j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                    jacobian[i][c].evaluate_double(x);
        Eigen::VectorXd step = j.colPivHouseholderQr().solve(-r);
        double step_norm = 0.0;
        for (std::size_t c = 0; c < colsn; ++c) {
            x[c] += step(static_cast<Eigen::Index>(c));
            step_norm = std::max(step_norm, std::abs(step(static_cast<Eigen::Index>(c))));
        }
        if (!all_finite(x)) return best;
        double res = residual_at(gens, x);
        if (res < best_res) {
            best = x;
            best_res = res;
        }
        if (best_res < 1e-15 || step_norm < 1e-16) break;
    }
    return best;
}

} // namespace

std::vector<RealPoint> solve_real_points(const QuotientAlgebra& algebra,
                                         const OracleOptions& options) {
    const std::size_t d = algebra.dimension();
    if (d == 0) return {};
    const std::size_t arity = algebra.ring() ? algebra.ring()->arity() : 0;
    if (arity == 0) {
        // Zero-variable ring with a nonzero algebra: the single point with no
        // coordinates.
        return {RealPoint{{}, 0.0}};
    }

    const std::vector<Polynomial>& gens = algebra.groebner_basis().generators;
    std::vector<std::vector<Polynomial>> jacobian(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        jacobian[i].reserve(arity);
        for (std::size_t v = 0; v < arity; ++v) jacobian[i].push_back(gens[i].derivative(v));
    }

    // Double-precision multiplication matrices (transposed: the evaluation
    // vectors of the points are left eigenvectors of the originals).
    std::vector<Eigen::MatrixXd> mats(arity, Eigen::MatrixXd(d, d));
    for (std::size_t v = 0; v < arity; ++v) {
        const RationalMatrix& m = algebra.variable_matrix(v);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                mats[v](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    to_double(m.at(i, j));
    }

    const long long exact_count = count_real_points(algebra);

    std::mt19937_64 rng(options.seed);
    std::vector<RealPoint> accepted;
    for (int attempt = 0; attempt < 3; ++attempt) {
        // Random combination of the multiplication matrices; a generic
        // combination separates the points.
        Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(d, d);
        for (std::size_t v = 0; v < arity; ++v)
            combo += static_cast<double>(1 + rng() % 19) * mats[v];

        Eigen::EigenSolver<Eigen::MatrixXd> solver(combo.transpose());
        if (solver.info() != Eigen::Success) {
            if (attempt == 2)
                throw EigenSolverError("eigen-decomposition of the multiplication matrix failed");
            continue;
        }

        std::vector<RealPoint> found;
        for (Eigen::Index e = 0; e < solver.eigenvectors().cols(); ++e) {
            Eigen::VectorXcd u = solver.eigenvectors().col(e);
            std::complex<double> u0 = u(0);
            if (std::abs(u0) < 1e-14) continue;
            u /= u0; // normalize so the coordinate of the basis monomial 1 is 1
            std::vector<double> coords(arity);
            for (std::size_t v = 0; v < arity; ++v) {
                // First entry of u^T * M_v = the x_v-coordinate of the point.
                std::complex<double> value = 0.0;
                for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(d); ++i)
                    value += u(i) * mats[v](i, 0);
                coords[v] = value.real();
            }
            if (!all_finite(coords)) continue;
            coords = polish(gens, jacobian, std::move(coords));
            double res = residual_at(gens, coords);
            if (res > options.tol) continue; // complex pair or spurious candidate
            found.push_back(RealPoint{std::move(coords), res});
        }

        // Merge near-duplicates, keeping the better-polished representative.
        std::vector<RealPoint> merged;
        for (auto& candidate : found) {
            bool absorbed = false;
            for (auto& rep : merged) {
                double dist = 0.0;
                for (std::size_t v = 0; v < arity; ++v)
                    dist = std::max(dist, std::abs(rep.coords[v] - candidate.coords[v]));
                if (dist <= options.merge_tol) {
                    if (candidate.residual < rep.residual) rep = candidate;
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) merged.push_back(std::move(candidate));
        }
        std::sort(merged.begin(), merged.end(), [](const RealPoint& a, const RealPoint& b) {
            return a.coords < b.coords;
        });

        accepted = std::move(merged);
        if (static_cast<long long>(accepted.size()) == exact_count) break;
    }
    return accepted;
}

long long count_real_points(const QuotientAlgebra& algebra) {
    Polynomial one = Polynomial::constant(algebra.ring(), Rational(1));
    return inertia(trace_form(one, algebra)).signature();
}

long long lambda_by_points(const QuotientAlgebra& algebra, const Polynomial& delta_residue,
                           const Polynomial& f, const OracleOptions& options) {
    std::vector<RealPoint> points = solve_real_points(algebra, options);
    const long long exact_count = count_real_points(algebra);
    if (static_cast<long long>(points.size()) != exact_count)
        throw PointCountMismatchError("located " + std::to_string(points.size()) +
                                      " real points but the exact count is " +
                                      std::to_string(exact_count));

    long long sum = 0;
    for (const auto& p : points) {
        const double dv = delta_residue.evaluate_double(p.coords);
        const double fv = f.evaluate_double(p.coords);
        if (std::abs(dv) <= options.tol)
            throw SignTooCloseToZeroError("the delta value " + std::to_string(dv) + " at point " +
                                          point_to_string(p.coords) +
                                          " is within tolerance of zero");
        if (std::abs(fv) <= options.tol)
            throw SignTooCloseToZeroError("the f value " + std::to_string(fv) + " at point " +
                                          point_to_string(p.coords) +
                                          " is within tolerance of zero");
        if (fv > 0) sum += (dv > 0) ? 1 : -1;
    }
    return lambda_formula_sign * sum;
}

} // namespace frameinv
