#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "frameinv/errors.hpp"
#include "frameinv/monomial.hpp"
#include "frameinv/rational.hpp"

namespace frameinv {

// A polynomial ring over the rationals, identified by its ordered list of
// variable names. Rings with equal name lists are interchangeable.
class Ring {
  public:
    // Validates: names distinct, nonempty, matching [A-Za-z][A-Za-z0-9_]*.
    explicit Ring(std::vector<std::string> variables);

    std::size_t arity() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::string& variable(std::size_t i) const { return variables_.at(i); }
    // Index of a name, or npos when the name is not a ring variable.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& name) const;

    bool operator==(const Ring& other) const { return variables_ == other.variables_; }
    bool operator!=(const Ring& other) const { return !(*this == other); }

  private:
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables);

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored in the canonical (graded reverse lexicographic) monomial order so
// iteration, printing, and comparison are deterministic. The zero polynomial
// is the empty term map. Stored coefficients are never zero.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, CanonicalMonomialLess>;

    Polynomial() = default; // invalid until given a ring; used only as a container slot
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial mono, const Rational& coeff);

    const RingPtr& ring() const { return ring_; }
    std::size_t arity() const { return ring_ ? ring_->arity() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    std::size_t term_count() const { return terms_.size(); }
    // Total degree; 0 for the zero polynomial.
    std::uint64_t total_degree() const;

    // Accumulates coeff onto mono's entry, erasing the entry when it cancels.
    void add_term(const Monomial& mono, const Rational& coeff);
    // Coefficient of mono (zero when absent).
    Rational coefficient(const Monomial& mono) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // this * (coeff * mono), in one pass.
    Polynomial multiplied_by(const Monomial& mono, const Rational& coeff) const;
    Polynomial scaled(const Rational& coeff) const;

    // Leading data under a global monomial order. Throw ValidationError on zero.
    const Monomial& leading_monomial(MonomialOrder order) const;
    const Rational& leading_coefficient(MonomialOrder order) const;
    // Scaled so the leading coefficient is exactly 1.
    Polynomial monic(MonomialOrder order) const;

    Polynomial derivative(std::size_t var_index) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    // Throws RingMismatchError unless both operands live in equal rings.
    void require_same_ring(const Polynomial& other) const;

  private:
    RingPtr ring_;
    TermMap terms_;
};

// Free-function views of the core operations.
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

} // namespace frameinv
