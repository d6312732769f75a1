#include "frameinv/quadform.hpp"

namespace frameinv {

RationalMatrix trace_form(const Polynomial& h, const QuotientAlgebra& algebra) {
    const std::size_t d = algebra.dimension();
    RationalMatrix theta(d);
    if (d == 0) return theta;

    // Entry (i,j) = T(h*b_i*b_j) = t^T M_{b_i} M_{b_j} hvec, with t the vector
    // of basis traces and hvec the coordinates of h. Precompute the row
    // vectors t^T M_{b_i} and the column vectors M_{b_j} hvec, then fill the
    // upper triangle with dot products and mirror it (the form is symmetric
    // because multiplication in the algebra commutes).
    const std::vector<Rational>& t = algebra.trace_vector();
    std::vector<Rational> hvec = algebra.coordinates(h);

    std::vector<std::vector<Rational>> rows(d), cols(d);
    for (std::size_t i = 0; i < d; ++i) {
        rows[i] = algebra.basis_matrix(i).apply_left(t);
        cols[i] = algebra.basis_matrix(i).apply(hvec);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Rational v = 0;
            for (std::size_t l = 0; l < d; ++l)
                if (rows[i][l] != 0 && cols[j][l] != 0) v += rows[i][l] * cols[j][l];
            theta.at(i, j) = v;
            if (i != j) theta.at(j, i) = std::move(v);
        }
    }
    return theta;
}

namespace {

void symmetric_swap(RationalMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    const std::size_t d = a.dim();
    for (std::size_t c = 0; c < d; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t r = 0; r < d; ++r) std::swap(a.at(r, i), a.at(r, j));
}

} // namespace

Inertia inertia(const RationalMatrix& form) {
    if (!form.is_symmetric()) throw ValidationError("inertia requires a symmetric matrix");
    RationalMatrix a(form);
    const std::size_t d = a.dim();
    Inertia result;

    std::size_t s = 0;
    while (s < d) {
        // Prefer a nonzero diagonal pivot.
        std::size_t p = s;
        while (p < d && a.at(p, p) == 0) ++p;
        if (p < d) {
            symmetric_swap(a, s, p);
            const Rational pivot = a.at(s, s);
            if (sign(pivot) > 0)
                ++result.positives;
            else
                ++result.negatives;
            // Schur complement of the 1x1 pivot block.
            for (std::size_t r = s + 1; r < d; ++r) {
                if (a.at(r, s) == 0) continue;
                const Rational c = a.at(r, s) / pivot;
                for (std::size_t t = s + 1; t < d; ++t) a.at(r, t) -= c * a.at(s, t);
            }
            ++s;
            continue;
        }

        // The remaining block has an all-zero diagonal: use an off-diagonal
        // hyperbolic pair, which contributes one positive and one negative
        // eigenvalue.
        std::size_t hp = d, hq = d;
        for (std::size_t r = s; r < d && hp == d; ++r)
            for (std::size_t c = r + 1; c < d; ++c)
                if (a.at(r, c) != 0) {
                    hp = r;
                    hq = c;
                    break;
                }
        if (hp == d) {
            result.zeros += d - s;
            break;
        }
        symmetric_swap(a, s, hp);
        symmetric_swap(a, s + 1, hq);
        const Rational v = a.at(s, s + 1);
        ++result.positives;
        ++result.negatives;
        // Schur complement of the 2x2 block [[0,v],[v,0]].
        for (std::size_t r = s + 2; r < d; ++r) {
            const Rational x = a.at(r, s);
            const Rational y = a.at(r, s + 1);
            if (x == 0 && y == 0) continue;
            for (std::size_t t = s + 2; t < d; ++t)
                a.at(r, t) -= (x * a.at(s + 1, t) + y * a.at(s, t)) / v;
        }
        s += 2;
    }
    return result;
}

bool is_nondegenerate(const RationalMatrix& form) {
    if (!form.is_symmetric()) throw ValidationError("nondegeneracy requires a symmetric matrix");
    return form.determinant() != 0;
}

} // namespace frameinv
