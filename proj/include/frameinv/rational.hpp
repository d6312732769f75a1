#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "frameinv/errors.hpp"

namespace frameinv {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator) through all arithmetic.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" (arbitrary precision). Throws ValidationError on
// malformed text or zero denominator.
Rational rational_from_string(const std::string& text);

double to_double(const Rational& q);

// Dense square matrix of exact rationals.
class RationalMatrix {
  public:
    RationalMatrix() : dim_(0) {}
    explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Rational(0)) {}

    static RationalMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    bool operator==(const RationalMatrix& other) const {
        return dim_ == other.dim_ && data_ == other.data_;
    }
    bool operator!=(const RationalMatrix& other) const { return !(*this == other); }

    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix transposed() const;
    bool is_symmetric() const;

    // Exact determinant by Gaussian elimination with row pivoting.
    Rational determinant() const;

    // matrix * column vector
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    // row vector * matrix
    std::vector<Rational> apply_left(const std::vector<Rational>& v) const;

    Rational trace() const;

  private:
    std::size_t dim_;
    std::vector<Rational> data_;
};

} // namespace frameinv
