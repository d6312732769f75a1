#include "frameinv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace frameinv {

namespace {

bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Ring::Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& name : variables_) {
        if (!valid_variable_name(name))
            throw ValidationError("invalid variable name '" + name +
                                  "' (must match [A-Za-z][A-Za-z0-9_]*)");
        if (!seen.insert(name).second)
            throw ValidationError("duplicate variable name '" + name + "'");
    }
}

std::size_t Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return npos;
}

RingPtr make_ring(std::vector<std::string> variables) {
    return std::make_shared<const Ring>(std::move(variables));
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, const Rational& value) {
    Polynomial p(std::move(ring));
    if (value != 0) p.terms_.emplace(Monomial(p.arity()), value);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.arity()) throw ValidationError("variable index out of range");
    Monomial m(p.arity());
    m.exponents[index] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, const Rational& coeff) {
    Polynomial p(std::move(ring));
    if (mono.arity() != p.arity()) throw ValidationError("monomial arity does not match ring");
    if (coeff != 0) p.terms_.emplace(std::move(mono), coeff);
    return p;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r(*this);
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r(*this);
    r -= other;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(other);
    Polynomial r(ring_);
    // Multiply the shorter operand into the longer one.
    const Polynomial& small = term_count() <= other.term_count() ? *this : other;
    const Polynomial& large = term_count() <= other.term_count() ? other : *this;
    for (const auto& [m, c] : small.terms_) {
        for (const auto& [m2, c2] : large.terms_) r.add_term(m * m2, c * c2);
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (ring_ && other.ring_ && *ring_ != *other.ring_) return false;
    return terms_ == other.terms_;
}

Polynomial Polynomial::multiplied_by(const Monomial& mono, const Rational& coeff) const {
    Polynomial r(ring_);
    if (coeff == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c * coeff);
    return r;
}

Polynomial Polynomial::scaled(const Rational& coeff) const {
    Polynomial r(ring_);
    if (coeff == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * coeff);
    return r;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
    if (terms_.empty()) throw ValidationError("the zero polynomial has no leading monomial");
    if (order == MonomialOrder::Degrevlex) return terms_.rbegin()->first;
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || monomial_less(*best, m, order)) best = &m;
    return *best;
}

const Rational& Polynomial::leading_coefficient(MonomialOrder order) const {
    return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(MonomialOrder order) const {
    if (terms_.empty()) return *this;
    const Rational& lc = leading_coefficient(order);
    if (lc == 1) return *this;
    return scaled(Rational(1) / lc);
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    if (var_index >= arity()) throw ValidationError("derivative variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        auto e = m.exponents[var_index];
        if (e == 0) continue;
        Monomial d(m);
        d.exponents[var_index] = e - 1;
        r.add_term(d, c * Rational(static_cast<unsigned long>(e)));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != arity()) throw ValidationError("evaluation point arity mismatch");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t e = 0; e < m.exponents[i]; ++e) v *= point[i];
        }
        total += v;
    }
    return total;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = to_double(c);
        for (std::size_t i = 0; i < point.size() && i < m.exponents.size(); ++i)
            if (m.exponents[i] != 0) v *= std::pow(point[i], static_cast<int>(m.exponents[i]));
        total += v;
    }
    return total;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (!ring_ || !other.ring_) {
        if (arity() != other.arity()) throw RingMismatchError("polynomials from different rings");
        return;
    }
    if (ring_ == other.ring_) return;
    if (*ring_ != *other.ring_) throw RingMismatchError("polynomials from different rings");
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
    return p.derivative(var_index);
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    return p.evaluate(point);
}

} // namespace frameinv
