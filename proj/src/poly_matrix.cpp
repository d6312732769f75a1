#include "frameinv/poly_matrix.hpp"

#include <utility>

namespace frameinv {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)),
      entries_(rows * cols, Polynomial::zero(ring_)) {
    if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
}

Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
    return entries_[r * cols_ + c];
}

const Polynomial& PolyMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
    return entries_[r * cols_ + c];
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                 const std::vector<std::size_t>& col_idx) const {
    PolyMatrix r(row_idx.size(), col_idx.size(), ring_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != other.entries_[i]) return false;
    return true;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw ValidationError("exact division by the zero polynomial");
    const auto order = MonomialOrder::Degrevlex;
    Polynomial quotient(p.ring());
    Polynomial rest(p);
    const Monomial& dlm = d.leading_monomial(order);
    const Rational& dlc = d.leading_coefficient(order);
    while (!rest.is_zero()) {
        const Monomial& rlm = rest.leading_monomial(order);
        if (!dlm.divides(rlm)) throw ValidationError("polynomial division is not exact");
        Monomial shift = rlm / dlm;
        Rational c = rest.leading_coefficient(order) / dlc;
        quotient.add_term(shift, c);
        rest -= d.multiplied_by(shift, c);
    }
    return quotient;
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> rows,
                        std::vector<std::size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Polynomial det = Polynomial::zero(m.ring());
    // Expand along the first remaining row.
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Polynomial& entry = m.at(rows[0], cols[c]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != c) sub_cols.push_back(cols[j]);
        Polynomial minor = det_cofactor(m, std::move(sub_rows), std::move(sub_cols));
        Polynomial contribution = entry * minor;
        if (c % 2 == 0)
            det += contribution;
        else
            det -= contribution;
    }
    return det;
}

Polynomial det_bareiss(const PolyMatrix& m) {
    const std::size_t d = m.rows();
    std::vector<std::vector<Polynomial>> b(d, std::vector<Polynomial>(d, Polynomial::zero(m.ring())));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b[i][j] = m.at(i, j);

    int sign = 1;
    Polynomial prev = Polynomial::constant(m.ring(), 1);
    for (std::size_t t = 0; t + 1 < d; ++t) {
        std::size_t pivot = t;
        while (pivot < d && b[pivot][t].is_zero()) ++pivot;
        if (pivot == d) return Polynomial::zero(m.ring());
        if (pivot != t) {
            std::swap(b[pivot], b[t]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < d; ++i) {
            for (std::size_t j = t + 1; j < d; ++j)
                b[i][j] = exact_divide(b[t][t] * b[i][j] - b[i][t] * b[t][j], prev);
        }
        prev = b[t][t];
    }
    Polynomial det = std::move(b[d - 1][d - 1]);
    return sign < 0 ? -det : det;
}

} // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant requires a square matrix");
    const std::size_t d = m.rows();
    if (d <= 4) {
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < d; ++i) idx[i] = i;
        return det_cofactor(m, idx, idx);
    }
    return det_bareiss(m);
}

PolyMatrix integer_row_transform(const std::vector<std::vector<long long>>& q,
                                 const PolyMatrix& a) {
    const std::size_t n = a.rows();
    if (q.size() != n) throw ValidationError("row transform dimension mismatch");
    for (const auto& row : q)
        if (row.size() != n) throw ValidationError("row transform must be square");
    PolyMatrix result(n, a.cols(), a.ring());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            Polynomial entry = Polynomial::zero(a.ring());
            for (std::size_t j = 0; j < n; ++j) {
                if (q[i][j] == 0) continue;
                entry += a.at(j, c).scaled(Rational(static_cast<long>(q[i][j])));
            }
            result.at(i, c) = std::move(entry);
        }
    }
    return result;
}

} // namespace frameinv
