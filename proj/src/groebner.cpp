#include "frameinv/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace frameinv {

namespace {

void require_common_ring(const std::vector<Polynomial>& polys) {
    for (std::size_t i = 1; i < polys.size(); ++i) polys[0].require_same_ring(polys[i]);
}

} // namespace

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      MonomialOrder order) {
    DivisionResult result;
    result.quotients.assign(divisors.size(), Polynomial::zero(p.ring()));
    result.remainder = Polynomial::zero(p.ring());

    struct Lead {
        const Monomial* lm;
        const Rational* lc;
    };
    std::vector<Lead> leads(divisors.size(), Lead{nullptr, nullptr});
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i].is_zero()) continue;
        leads[i].lm = &divisors[i].leading_monomial(order);
        leads[i].lc = &divisors[i].leading_coefficient(order);
    }

    Polynomial rest(p);
    while (!rest.is_zero()) {
        const Monomial rlm = rest.leading_monomial(order);
        const Rational rlc = rest.leading_coefficient(order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].lm || !leads[i].lm->divides(rlm)) continue;
            Monomial shift = rlm / *leads[i].lm;
            Rational c = rlc / *leads[i].lc;
            result.quotients[i].add_term(shift, c);
            rest -= divisors[i].multiplied_by(shift, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            result.remainder.add_term(rlm, rlc);
            rest.add_term(rlm, -rlc);
        }
    }
    return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.ring) {
        Polynomial probe = Polynomial::zero(gb.ring);
        p.require_same_ring(probe);
    }
    return divide(p, gb.generators, gb.order).remainder;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const GroebnerOptions& options) {
    if (generators.empty()) throw ValidationError("at least one generator is required");
    require_common_ring(generators);
    const MonomialOrder order = options.order;

    std::vector<Polynomial> g;
    for (const auto& gen : generators)
        if (!gen.is_zero()) g.push_back(gen.monic(order));
    if (g.empty()) throw ValidationError("at least one nonzero generator is required");
    const RingPtr ring = g[0].ring();

    auto lm = [&](std::size_t i) -> const Monomial& { return g[i].leading_monomial(order); };

    // Pending S-pairs, popped smallest lcm first (normal selection strategy).
    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        MonomialOrder order;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.lcm != b.lcm) return monomial_less(a.lcm, b.lcm, order);
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> queue(PairLess{order});
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto push_pair = [&](std::size_t i, std::size_t j) {
        queue.insert(Pair{Monomial::lcm(lm(i), lm(j)), i, j});
        pending.insert({i, j});
    };

    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    std::uint64_t reductions = 0;
    while (!queue.empty()) {
        Pair pair = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pair.i, pair.j});

        const Monomial& lmi = lm(pair.i);
        const Monomial& lmj = lm(pair.j);
        const Monomial& l = pair.lcm;

        // Product criterion: coprime leading monomials reduce to zero.
        if (l == lmi * lmj) continue;

        // Chain criterion: a third generator whose leading monomial divides
        // the lcm, with both side pairs already handled, makes this pair
        // redundant.
        bool chained = false;
        for (std::size_t t = 0; t < g.size() && !chained; ++t) {
            if (t == pair.i || t == pair.j) continue;
            if (!lm(t).divides(l)) continue;
            auto side1 = std::minmax(pair.i, t);
            auto side2 = std::minmax(pair.j, t);
            if (!pending.count({side1.first, side1.second}) &&
                !pending.count({side2.first, side2.second}))
                chained = true;
        }
        if (chained) continue;

        if (++reductions > options.max_spairs)
            throw StepLimitError("S-pair reduction limit exceeded (" +
                                 std::to_string(options.max_spairs) + ")");

        // Both generators are monic, so the S-polynomial needs no scaling.
        Polynomial s = g[pair.i].multiplied_by(l / lmi, Rational(1)) -
                       g[pair.j].multiplied_by(l / lmj, Rational(1));
        Polynomial r = divide(s, g, order).remainder;
        if (r.is_zero()) continue;

        g.push_back(r.monic(order));
        const std::size_t t = g.size() - 1;
        for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
    }

    // Minimize: drop generators whose leading monomial is divisible by
    // another kept generator's leading monomial.
    std::vector<bool> kept(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!kept[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j || !kept[j]) continue;
            if (lm(j).divides(lm(i)) && !(lm(i) == lm(j) && j > i)) {
                kept[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (kept[i]) minimal.push_back(g[i]);

    // Reduce every generator against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial reduced = divide(minimal[i], others, order).remainder.monic(order);
            if (reduced != minimal[i]) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(a.leading_monomial(order), b.leading_monomial(order), order);
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.ring = ring;
    gb.generators = std::move(minimal);
    return gb;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    const std::size_t arity = gb.ring ? gb.ring->arity() : 0;
    if (arity == 0) return true;
    std::vector<bool> covered(arity, false);
    for (const auto& gen : gb.generators) {
        if (gen.is_zero()) continue;
        const Monomial& lm = gen.leading_monomial(gb.order);
        // A pure power of one variable (a constant counts as a pure power of
        // every variable).
        std::size_t nonzero_vars = 0, last = 0;
        for (std::size_t v = 0; v < arity; ++v) {
            if (lm.exponents[v] != 0) {
                ++nonzero_vars;
                last = v;
            }
        }
        if (nonzero_vars == 0) return true; // constant generator: unit ideal
        if (nonzero_vars == 1) covered[last] = true;
    }
    for (bool c : covered)
        if (!c) return false;
    return true;
}

QuotientAlgebra QuotientAlgebra::build(GroebnerBasis gb) {
    if (!is_zero_dimensional(gb))
        throw NotZeroDimensionalError("the ideal is not zero-dimensional");

    QuotientAlgebra a;
    a.gb_ = std::move(gb);
    const RingPtr& ring = a.gb_.ring;
    const std::size_t arity = ring ? ring->arity() : 0;
    const MonomialOrder order = a.gb_.order;

    std::vector<const Monomial*> lms;
    bool unit_ideal = false;
    for (const auto& gen : a.gb_.generators) {
        if (gen.is_zero()) continue;
        const Monomial& lm = gen.leading_monomial(order);
        if (lm.is_one()) unit_ideal = true;
        lms.push_back(&lm);
    }

    if (!unit_ideal) {
        // Per-variable exponent bounds from the pure-power leading monomials.
        std::vector<std::uint32_t> bounds(arity, 0);
        for (const Monomial* lm : lms) {
            std::size_t nonzero_vars = 0, last = 0;
            for (std::size_t v = 0; v < arity; ++v)
                if (lm->exponents[v] != 0) {
                    ++nonzero_vars;
                    last = v;
                }
            if (nonzero_vars == 1) {
                std::uint32_t e = lm->exponents[last];
                if (bounds[last] == 0 || e < bounds[last]) bounds[last] = e;
            }
        }

        // Enumerate the grid below the bounds, keeping monomials divisible by
        // no leading monomial.
        std::vector<Monomial> standard;
        Monomial current(arity);
        auto is_standard = [&](const Monomial& m) {
            for (const Monomial* lm : lms)
                if (lm->divides(m)) return false;
            return true;
        };
        auto enumerate = [&](auto&& self, std::size_t v) -> void {
            if (v == arity) {
                if (is_standard(current)) standard.push_back(current);
                return;
            }
            for (std::uint32_t e = 0; e < bounds[v]; ++e) {
                current.exponents[v] = e;
                self(self, v + 1);
            }
            current.exponents[v] = 0;
        };
        enumerate(enumerate, 0);

        std::sort(standard.begin(), standard.end(), [&](const Monomial& x, const Monomial& y) {
            return monomial_less(x, y, order);
        });
        a.basis_ = std::move(standard);
    }

    const std::size_t d = a.basis_.size();
    std::map<Monomial, std::size_t, CanonicalMonomialLess> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(a.basis_[i], i);

    // Multiplication matrix per variable: column j holds the coordinates of
    // x_v * b_j.
    a.var_matrices_.assign(arity, RationalMatrix(d));
    for (std::size_t v = 0; v < arity; ++v) {
        for (std::size_t j = 0; j < d; ++j) {
            Monomial shifted = a.basis_[j];
            shifted.exponents[v] += 1;
            auto hit = index.find(shifted);
            if (hit != index.end()) {
                a.var_matrices_[v].at(hit->second, j) = 1;
                continue;
            }
            Polynomial rem =
                divide(Polynomial::term(ring, shifted, Rational(1)), a.gb_.generators, order)
                    .remainder;
            for (const auto& [m, c] : rem.terms()) a.var_matrices_[v].at(index.at(m), j) = c;
        }
    }

    // Multiplication matrix per basis monomial, built from a smaller basis
    // monomial (the staircase is closed under division, so the parent is
    // always already available).
    a.basis_matrices_.reserve(d);
    a.traces_.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (i == 0) {
            a.basis_matrices_.push_back(RationalMatrix::identity(d));
        } else {
            std::size_t v = 0;
            while (a.basis_[i].exponents[v] == 0) ++v;
            Monomial parent = a.basis_[i];
            parent.exponents[v] -= 1;
            a.basis_matrices_.push_back(a.var_matrices_[v] * a.basis_matrices_[index.at(parent)]);
        }
        a.traces_.push_back(a.basis_matrices_.back().trace());
    }
    return a;
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p) const {
    if (gb_.ring) {
        Polynomial probe = Polynomial::zero(gb_.ring);
        p.require_same_ring(probe);
    }
    Polynomial rem = divide(p, gb_.generators, gb_.order).remainder;
    std::vector<Rational> coords(basis_.size(), Rational(0));
    for (const auto& [m, c] : rem.terms()) {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] == m) {
                coords[i] = c;
                break;
            }
        }
    }
    return coords;
}

const RationalMatrix& QuotientAlgebra::variable_matrix(std::size_t var_index) const {
    if (var_index >= var_matrices_.size())
        throw ValidationError("variable index out of range");
    return var_matrices_[var_index];
}

const RationalMatrix& QuotientAlgebra::basis_matrix(std::size_t basis_index) const {
    if (basis_index >= basis_matrices_.size())
        throw ValidationError("basis index out of range");
    return basis_matrices_[basis_index];
}

RationalMatrix QuotientAlgebra::multiplication_matrix(const Polynomial& h) const {
    const std::size_t d = basis_.size();
    RationalMatrix m(d);
    std::vector<Rational> coords = coordinates(h);
    for (std::size_t i = 0; i < d; ++i) {
        if (coords[i] == 0) continue;
        const RationalMatrix& bi = basis_matrices_[i];
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (bi.at(r, c) != 0) m.at(r, c) += coords[i] * bi.at(r, c);
    }
    return m;
}

Rational QuotientAlgebra::trace_of(const Polynomial& h) const {
    std::vector<Rational> coords = coordinates(h);
    Rational t = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) t += coords[i] * traces_[i];
    return t;
}

QuotientAlgebra quotient_algebra(GroebnerBasis gb) { return QuotientAlgebra::build(std::move(gb)); }

Rational trace_of(const Polynomial& h, const QuotientAlgebra& algebra) {
    return algebra.trace_of(h);
}

} // namespace frameinv
