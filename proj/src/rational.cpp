#include "frameinv/rational.hpp"

#include <cctype>

namespace frameinv {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }
    auto read_digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ValidationError(std::string("malformed rational literal '") + text + "': expected " + what);
        return text.substr(start, pos - start);
    };
    std::string numerator = read_digits("digits");
    std::string denominator = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        denominator = read_digits("denominator digits");
    }
    if (pos != text.size())
        throw ValidationError(std::string("malformed rational literal '") + text + "'");

    mpz_class num(numerator, 10), den(denominator, 10);
    if (den == 0) throw ValidationError(std::string("zero denominator in rational literal '") + text + "'");
    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

RationalMatrix RationalMatrix::identity(std::size_t dim) {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    RationalMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t l = 0; l < dim_; ++l) {
            const Rational& a = at(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Rational& b = other.at(l, j);
                if (b == 0) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
    RationalMatrix r(dim_);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) r.data_[i] = data_[i] + other.data_[i];
    return r;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rational RationalMatrix::determinant() const {
    if (dim_ == 0) return 1;
    RationalMatrix work(*this);
    Rational det = 1;
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        while (pivot < dim_ && work.at(pivot, col) == 0) ++pivot;
        if (pivot == dim_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < dim_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
            det = -det;
        }
        const Rational p = work.at(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < dim_; ++r) {
            if (work.at(r, col) == 0) continue;
            Rational factor = work.at(r, col) / p;
            for (std::size_t j = col; j < dim_; ++j) work.at(r, j) -= factor * work.at(col, j);
        }
    }
    return det;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> r(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Rational> RationalMatrix::apply_left(const std::vector<Rational>& v) const {
    std::vector<Rational> r(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (at(i, j) != 0) r[j] += v[i] * at(i, j);
    }
    return r;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

} // namespace frameinv
