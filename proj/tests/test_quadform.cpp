#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frameinv/quadform.hpp"
#include "frameinv/stiefel.hpp"
#include "oracle_inertia.hpp"
#include "support.hpp"

using namespace frameinv;
using testsupport::P;
using testsupport::random_int_coeff;
using testsupport::ring_xyz;

namespace {

QuotientAlgebra sphere_algebra() {
    auto ring = ring_xyz();
    return QuotientAlgebra::build(
        buchberger(minors_ideal(testsupport::example_frame_matrix(ring))));
}

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

RationalMatrix random_symmetric(std::mt19937_64& rng, std::size_t dim) {
    RationalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            Rational v = testsupport::random_rational(rng, 6, 4);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

// Random integer matrix with nonzero determinant (regenerate until found).
RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t dim) {
    for (;;) {
        RationalMatrix p(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) p.at(i, j) = random_int_coeff(rng, 3);
        if (p.determinant() != 0) return p;
    }
}

RationalMatrix congruent(const RationalMatrix& q, const RationalMatrix& p) {
    return p.transposed() * q * p;
}

} // namespace

TEST_CASE("trace forms on the sphere quotient algebra") {
    QuotientAlgebra algebra = sphere_algebra();
    auto ring = algebra.ring();

    RationalMatrix theta_one = trace_form(P("1", ring), algebra);
    CHECK(theta_one == from_rows({{2, -1}, {-1, 1}}));

    RationalMatrix theta_delta = trace_form(P("-75/2*z - 24", ring), algebra);
    RationalMatrix want_delta(2);
    want_delta.at(0, 0) = Rational(-21) / 2;
    want_delta.at(0, 1) = Rational(-27) / 2;
    want_delta.at(1, 0) = Rational(-27) / 2;
    want_delta.at(1, 1) = Rational(27) / 2;
    CHECK(theta_delta == want_delta);

    RationalMatrix theta_f_delta = trace_form(P("-45/4*z - 18", ring), algebra);
    RationalMatrix want_f_delta(2);
    want_f_delta.at(0, 0) = Rational(-99) / 4;
    want_f_delta.at(0, 1) = Rational(27) / 4;
    want_f_delta.at(1, 0) = Rational(27) / 4;
    want_f_delta.at(1, 1) = Rational(-27) / 4;
    CHECK(theta_f_delta == want_f_delta);

    CHECK(inertia(theta_delta) == Inertia{1, 1, 0});
    CHECK(inertia(theta_f_delta) == Inertia{0, 2, 0});
    CHECK(inertia(theta_one) == Inertia{2, 0, 0});
    CHECK(is_nondegenerate(theta_delta));
    CHECK(is_nondegenerate(theta_f_delta));

    // The weight enters linearly: Theta_{h1+h2} = Theta_{h1} + Theta_{h2}.
    CHECK(trace_form(P("-75/2*z - 24", ring) + P("-45/4*z - 18", ring), algebra) ==
          theta_delta + theta_f_delta);
    // Theta_h depends only on the residue class of h.
    CHECK(trace_form(P("-75/2*z - 24 + z^2 + z", ring), algebra) == theta_delta);
}

TEST_CASE("inertia of small pinned forms") {
    CHECK(inertia(RationalMatrix(0)) == Inertia{0, 0, 0});
    CHECK(inertia(RationalMatrix(3)) == Inertia{0, 0, 3});
    CHECK(inertia(from_rows({{0, 1}, {1, 0}})) == Inertia{1, 1, 0}); // hyperbolic plane
    CHECK(inertia(from_rows({{5}})) == Inertia{1, 0, 0});
    CHECK(inertia(from_rows({{-2}})) == Inertia{0, 1, 0});
    CHECK(inertia(from_rows({{0}})) == Inertia{0, 0, 1});
    CHECK(inertia(from_rows({{1, 0, 0}, {0, -3, 0}, {0, 0, 0}})) == Inertia{1, 1, 1});
    CHECK(inertia(from_rows({{1, 2}, {2, 4}})) == Inertia{1, 0, 1}); // rank-1 outer square
    CHECK(inertia(from_rows({{1, 2}, {2, 1}})) == Inertia{1, 1, 0});
    // Zero diagonal but multiple hyperbolic pairs.
    CHECK(inertia(from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}})) ==
          Inertia{2, 2, 0});
}

TEST_CASE("inertia accessors and validation") {
    Inertia i{3, 1, 2};
    CHECK(i.signature() == 2);
    CHECK(i.rank() == 4);
    Inertia j{0, 2, 0};
    CHECK(j.signature() == -2);
    RationalMatrix asym(2);
    asym.at(0, 1) = Rational(1);
    CHECK_THROWS_AS(inertia(asym), ValidationError);
    CHECK_FALSE(is_nondegenerate(RationalMatrix(2)));
    CHECK(is_nondegenerate(RationalMatrix::identity(3)));
    CHECK(is_nondegenerate(RationalMatrix(0))); // empty form: determinant 1
}

TEST_CASE("inertia agrees with the characteristic-polynomial oracle") {
    // Independent route: Faddeev-LeVerrier characteristic polynomial plus
    // Descartes sign counting (exact for the real spectrum of a symmetric
    // matrix).
    std::mt19937_64 rng(90210);
    int checked = 0;
    for (std::size_t dim = 1; dim <= 8; ++dim) {
        for (int rep = 0; rep < 8; ++rep) {
            RationalMatrix q = random_symmetric(rng, dim);
            CHECK(inertia(q) == testsupport::descartes_inertia(q));
            ++checked;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("inertia of deliberately singular forms matches the oracle") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 30; ++t) {
        std::size_t dim = 2 + rng() % 5;
        // Start from a diagonal with a forced zero block, then congruence by
        // a random invertible integer matrix; inertia is known by Sylvester.
        std::size_t zeros = 1 + rng() % dim;
        Inertia want{0, 0, zeros};
        RationalMatrix d(dim);
        for (std::size_t i = zeros; i < dim; ++i) {
            long v = static_cast<long>(rng() % 9) - 4;
            if (v == 0) v = 1;
            d.at(i, i) = Rational(v);
            (v > 0 ? want.positives : want.negatives)++;
        }
        RationalMatrix q = congruent(d, random_invertible(rng, dim));
        REQUIRE(q.is_symmetric());
        CHECK(inertia(q) == want);
        CHECK(inertia(q) == testsupport::descartes_inertia(q));
        CHECK(is_nondegenerate(q) == (zeros == 0));
    }
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937_64 rng(777000);
    for (int t = 0; t < 40; ++t) {
        std::size_t dim = 1 + rng() % 6;
        RationalMatrix q = random_symmetric(rng, dim);
        RationalMatrix p = random_invertible(rng, dim);
        CHECK(inertia(congruent(q, p)) == inertia(q));
    }
}

TEST_CASE("signature and rank have the same parity") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 40; ++t) {
        std::size_t dim = 1 + rng() % 7;
        Inertia i = inertia(random_symmetric(rng, dim));
        long long sig = i.signature();
        long long parity = sig % 2;
        if (parity < 0) parity += 2;
        CHECK(parity == static_cast<long long>(i.rank() % 2));
        CHECK(i.positives + i.negatives + i.zeros == dim);
    }
}

TEST_CASE("trace form entries are symmetric products of basis traces") {
    QuotientAlgebra algebra = sphere_algebra();
    auto ring = algebra.ring();
    // Entry (i,j) is T(h * b_i * b_j); spot-check against trace_of directly.
    Polynomial h = P("x + 2*z - 1", ring);
    RationalMatrix theta = trace_form(h, algebra);
    REQUIRE(theta.dim() == 2);
    Polynomial z = P("z", ring);
    CHECK(theta.at(0, 0) == algebra.trace_of(h));
    CHECK(theta.at(0, 1) == algebra.trace_of(h * z));
    CHECK(theta.at(1, 0) == theta.at(0, 1));
    CHECK(theta.at(1, 1) == algebra.trace_of(h * z * z));
    CHECK(theta.is_symmetric());
}
