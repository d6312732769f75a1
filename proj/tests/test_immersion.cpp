#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frameinv/immersion.hpp"
#include "frameinv/parser.hpp"
#include "support.hpp"

using namespace frameinv;
using testsupport::P;

namespace {

RingPtr ring3() { return make_ring({"x1", "x2", "x3"}); }

std::vector<Polynomial> degree5_map(const RingPtr& r) {
    return {
        P("x3^3 + x2 - x1 - 3*x3", r),
        P("x2^3 + 2*x1 - x2 + x3", r),
        P("x1*x2 + 2*x1", r),
        P("x1*x3 - x2", r),
    };
}

} // namespace

TEST_CASE("problem construction enforces the dimension pattern") {
    auto r = ring3();
    Polynomial f = P("100 - x1^2 - x2^2 - x3^2", r);
    CHECK_NOTHROW(ImmersionProblem(f, degree5_map(r)));
    // The component count must be even...
    CHECK_THROWS_AS(ImmersionProblem(f, {P("x1", r), P("x2", r), P("x3", r)}), ValidationError);
    // ...and m = count/2 must be even as well.
    auto r4 = make_ring({"y1", "y2", "y3", "y4"});
    std::vector<Polynomial> six;
    for (int i = 0; i < 6; ++i) six.push_back(P("y1", r4));
    try {
        ImmersionProblem(P("1 - y1^2", r4), six);
        FAIL("expected rejection of odd m");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("m must be even") != std::string::npos);
    }
    // m >= 2: a two-component map would mean m = 1.
    auto r2 = make_ring({"u", "v"});
    CHECK_THROWS_AS(ImmersionProblem(P("1 - u^2 - v^2", r2), {P("u", r2), P("v", r2)}),
                    ValidationError);
    // The ring must have exactly m + 1 variables.
    auto rbig = make_ring({"a", "b", "c", "d"});
    std::vector<Polynomial> four;
    for (int i = 0; i < 4; ++i) four.push_back(P("a", rbig));
    CHECK_THROWS_AS(ImmersionProblem(P("1 - a^2", rbig), four), ValidationError);
    // f must be nonzero.
    CHECK_THROWS_AS(ImmersionProblem(Polynomial::zero(r), degree5_map(r)), ValidationError);
    CHECK(ImmersionProblem(f, degree5_map(r)).m() == 2);
}

TEST_CASE("the Jacobian frame stacks the gradients") {
    auto r = ring3();
    ImmersionProblem problem(P("100 - x1^2 - x2^2 - x3^2", r), degree5_map(r));
    StiefelProblem alpha = build_alpha(problem);
    REQUIRE(alpha.n() == 5);
    REQUIRE(alpha.k() == 3);
    CHECK(alpha.n() - alpha.k() == 2); // equals m
    // Row 0 is the gradient of f.
    CHECK(alpha.matrix.at(0, 0) == P("-2*x1", r));
    CHECK(alpha.matrix.at(0, 1) == P("-2*x2", r));
    CHECK(alpha.matrix.at(0, 2) == P("-2*x3", r));
    // Row 1 is the gradient of the first component.
    CHECK(alpha.matrix.at(1, 0) == P("-1", r));
    CHECK(alpha.matrix.at(1, 1) == P("1", r));
    CHECK(alpha.matrix.at(1, 2) == P("3*x3^2 - 3", r));
    // Row 3 is the gradient of x1*x2 + 2*x1.
    CHECK(alpha.matrix.at(3, 0) == P("x2 + 2", r));
    CHECK(alpha.matrix.at(3, 1) == P("x1", r));
    CHECK(alpha.matrix.at(3, 2).is_zero());
    // The shared hypersurface polynomial comes through unchanged.
    CHECK(alpha.f == problem.f);
}

TEST_CASE("intersection number of the degree-five immersion") {
    auto r = ring3();
    ImmersionProblem problem(P("100 - x1^2 - x2^2 - x3^2", r), degree5_map(r));
    IntersectionReport report = intersection_number(problem);
    CHECK(report.intersection_number == 5);
    CHECK(report.m == 2);
    CHECK(report.lambda_report.lambda == -5);
    CHECK(report.lambda_report.algebra_dim == 21);
    CHECK(report.lambda_report.n == 5);
    CHECK(report.lambda_report.k == 3);
    // The sign contract between the two invariants.
    CHECK(report.intersection_number == -report.lambda_report.lambda);
    // Signatures behind the value.
    CHECK(report.lambda_report.signature_delta == 5);
    CHECK(report.lambda_report.signature_f_delta == 5);
}

TEST_CASE("the lexicographic order gives the same intersection number") {
    auto r = ring3();
    ImmersionProblem problem(P("100 - x1^2 - x2^2 - x3^2", r), degree5_map(r));
    StiefelOptions lex;
    lex.order = MonomialOrder::Lex;
    IntersectionReport report = intersection_number(problem, lex);
    CHECK(report.intersection_number == 5);
}

TEST_CASE("an embedding has intersection number zero") {
    auto r = ring3();
    std::vector<Polynomial> inclusion = {P("x1", r), P("x2", r), P("x3", r),
                                         Polynomial::zero(r)};
    ImmersionProblem problem(P("100 - x1^2 - x2^2 - x3^2", r), inclusion);
    IntersectionReport report = intersection_number(problem);
    CHECK(report.intersection_number == 0);
    // The Jacobian frame contains a constant full-rank block, so M is empty
    // and the invariant vanishes for structural reasons.
    CHECK(report.lambda_report.algebra_dim == 0);
}

TEST_CASE("a linear graph map is also trivial") {
    auto r = ring3();
    std::vector<Polynomial> graph = {P("x1 + x3", r), P("x2", r), P("x3 - x2", r), P("x1", r)};
    ImmersionProblem problem(P("4 - x1^2 - x2^2 - x3^2", r), graph);
    IntersectionReport report = intersection_number(problem);
    CHECK(report.intersection_number == 0);
}
