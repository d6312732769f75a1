#pragma once

// Shared builders for the test suite: the two running example problems, a
// seeded random-instance generator, and small parsing shorthands.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frameinv/immersion.hpp"
#include "frameinv/oracle.hpp"
#include "frameinv/parser.hpp"
#include "frameinv/stiefel.hpp"

namespace testsupport {

using namespace frameinv;

inline RingPtr ring_xyz() { return make_ring({"x", "y", "z"}); }

inline Polynomial P(const std::string& text, const RingPtr& ring) {
    return parse_poly(text, ring);
}

inline PolyMatrix matrix_from(const std::vector<std::vector<std::string>>& rows,
                              const RingPtr& ring) {
    PolyMatrix m(rows.size(), rows.at(0).size(), ring);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = P(rows[i][j], ring);
    return m;
}

// The 4x2 running example: a frame on the unit sphere whose invariant is 1.
inline PolyMatrix example_frame_matrix(const RingPtr& ring) {
    return matrix_from({{"2*z + 2", "y + 2"},
                        {"2*y + 1", "2*y + 1"},
                        {"2*x + 1", "y + 2"},
                        {"z + 1", "2*y + 1"}},
                       ring);
}

inline StiefelProblem example_frame_problem(const RingPtr& ring) {
    return StiefelProblem(example_frame_matrix(ring), P("1 - x^2 - y^2 - z^2", ring));
}

// The quartic immersion example on the radius-10 sphere whose intersection
// number is 5.
inline ImmersionProblem example_immersion_problem(const std::string& radius_sq = "100") {
    auto ring = make_ring({"x1", "x2", "x3"});
    std::vector<Polynomial> g = {
        P("x3^3 + x2 - x1 - 3*x3", ring),
        P("x2^3 + 2*x1 - x2 + x3", ring),
        P("x1*x2 + 2*x1", ring),
        P("x1*x3 - x2", ring),
    };
    return ImmersionProblem(P(radius_sq + " - x1^2 - x2^2 - x3^2", ring), std::move(g));
}

// The constant orthonormal frame (first two coordinate vectors in R^4).
inline StiefelProblem constant_frame_problem(const RingPtr& ring) {
    return StiefelProblem(matrix_from({{"1", "0"}, {"0", "1"}, {"0", "0"}, {"0", "0"}}, ring),
                          P("1 - x^2 - y^2 - z^2", ring));
}

// Uniform rational in {-range,...,range} (integers). Constructed in integer
// arithmetic first: GMP expression templates must never escape a statement.
inline Rational random_int_coeff(std::mt19937_64& rng, long range) {
    long span = 2 * range + 1;
    return Rational(static_cast<long>(rng() % static_cast<unsigned long>(span)) - range);
}

// Uniform rational p/q with p in {-range..range}, q in {1..qmax}.
inline Rational random_rational(std::mt19937_64& rng, long range, long qmax) {
    Rational num = random_int_coeff(rng, range);
    Rational den(1 + static_cast<long>(rng() % static_cast<unsigned long>(qmax)));
    return num / den;
}

inline Polynomial random_affine(std::mt19937_64& rng, const RingPtr& ring, long range) {
    Polynomial p = Polynomial::constant(ring, random_int_coeff(rng, range));
    for (std::size_t v = 0; v < ring->arity(); ++v)
        p += Polynomial::variable(ring, v).scaled(random_int_coeff(rng, range));
    return p;
}

// Random sparse polynomial: up to max_terms terms of total degree <= max_deg,
// rational coefficients. May be zero.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned max_deg,
                              unsigned max_terms) {
    Polynomial p = Polynomial::zero(ring);
    unsigned terms = static_cast<unsigned>(rng() % (max_terms + 1));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial mono(ring->arity());
        if (ring->arity() > 0) {
            unsigned budget = static_cast<unsigned>(rng() % (max_deg + 1));
            for (unsigned d = 0; d < budget; ++d)
                mono.exponents[rng() % ring->arity()] += 1;
        }
        p.add_term(mono, random_rational(rng, 9, 4));
    }
    return p;
}

// Random frame problem over (x,y,z): 4x2 or 5x3 with affine entries
// (coefficients in [-5,5]) and f = c - x^2 - y^2 - z^2, c in {1..4}. With
// this coefficient range nearly every draw satisfies the theorem hypotheses.
inline StiefelProblem random_frame_problem(std::mt19937_64& rng, const RingPtr& ring, bool tall) {
    std::size_t n = tall ? 5 : 4, k = tall ? 3 : 2;
    PolyMatrix a(n, k, ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) a.at(i, j) = random_affine(rng, ring, 5);
    Polynomial f = Polynomial::constant(ring, Rational(1 + static_cast<long>(rng() % 4)));
    for (std::size_t v = 0; v < ring->arity(); ++v)
        f -= Polynomial::variable(ring, v) * Polynomial::variable(ring, v);
    return StiefelProblem(std::move(a), std::move(f));
}

// Collects `want` random frame problems that pass the full pipeline, runs
// `body(problem, report)` on each. Returns the number collected (caps the
// search at `max_attempts`).
template <typename Body>
inline int for_each_passing_instance(std::uint64_t seed, int want, int max_attempts, Body body) {
    auto ring = ring_xyz();
    std::mt19937_64 rng(seed);
    int collected = 0;
    for (int attempt = 0; attempt < max_attempts && collected < want; ++attempt) {
        auto problem = random_frame_problem(rng, ring, attempt % 2 == 0);
        StiefelOptions options;
        options.seed = 7;
        options.retries = 4;
        // A tight S-pair budget turns the occasional pathological draw into a
        // quick StepLimitError skip instead of a multi-minute basis run.
        options.max_spairs = 20000;
        try {
            LambdaReport report = lambda(problem, options);
            ++collected;
            body(problem, report);
        } catch (const Error&) {
            // hypothesis failure: draw again
        }
    }
    return collected;
}

} // namespace testsupport
