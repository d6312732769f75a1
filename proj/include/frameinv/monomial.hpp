#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace frameinv {

// A power product of the ring variables, stored as an exponent vector whose
// length always equals the ambient variable count.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t arity() const { return exponents.size(); }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exponents) d += e;
        return d;
    }

    bool is_one() const {
        for (auto e : exponents)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > other.exponents[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += other.exponents[i];
        return r;
    }

    // Caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= other.exponents[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            if (b.exponents[i] > r.exponents[i]) r.exponents[i] = b.exponents[i];
        return r;
    }

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }
    bool operator!=(const Monomial& other) const { return exponents != other.exponents; }
};

enum class MonomialOrder { Degrevlex, Lex };

// Strict "less" under the given global order.
inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::Degrevlex) {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        // Same degree: the rightmost differing exponent decides; the monomial
        // with the LARGER entry there is the smaller monomial.
        for (std::size_t i = a.exponents.size(); i-- > 0;) {
            if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
        }
        return false;
    }
    // Lex: leftmost differing exponent decides.
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
    }
    return false;
}

// Canonical comparator used for polynomial term storage (always degrevlex so
// values print and hash deterministically regardless of the order a Groebner
// run uses).
struct CanonicalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b, MonomialOrder::Degrevlex);
    }
};

inline const char* order_name(MonomialOrder order) {
    return order == MonomialOrder::Degrevlex ? "degrevlex" : "lex";
}

} // namespace frameinv
