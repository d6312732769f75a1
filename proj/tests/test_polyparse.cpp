#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "frameinv/parser.hpp"
#include "support.hpp"

using namespace frameinv;
using testsupport::P;
using testsupport::random_poly;
using testsupport::ring_xyz;

TEST_CASE("basic parses") {
    auto ring = ring_xyz();
    Polynomial p = parse_poly("2*z + 2", ring);
    Polynomial expected = Polynomial::variable(ring, 2).scaled(2) + Polynomial::constant(ring, 2);
    CHECK(p == expected);
    CHECK(parse_poly("0", ring).is_zero());
    CHECK(parse_poly("  0  ", ring).is_zero());
    Polynomial sphere = parse_poly("1 - x^2 - y^2 - z^2", ring);
    CHECK(evaluate(sphere, {Rational(1), Rational(0), Rational(0)}) == 0);
    CHECK(evaluate(sphere, {Rational(0), Rational(0), Rational(0)}) == 1);
    CHECK(sphere.term_count() == 4);
}

TEST_CASE("canonical formatting") {
    auto ring = ring_xyz();
    CHECK(format_poly(Polynomial::zero(ring)) == "0");
    CHECK(format_poly(P("2*z + 2", ring)) == "2*z + 2");
    CHECK(format_poly(P("-24 - 75/2*z", ring)) == "-75/2*z - 24");
    CHECK(format_poly(P("z + z^2", ring)) == "z^2 + z");
    CHECK(format_poly(P("-1/2*z + y", ring)) == "y - 1/2*z");
    CHECK(format_poly(P("-z + x - 1/2", ring)) == "x - z - 1/2");
    // Descending graded order with the coefficient 1 suppressed and '*'
    // between every pair of adjacent atoms.
    CHECK(format_poly(P("y*x + x^2 + 1 + z", ring)) == "x^2 + x*y + z + 1");
    CHECK(format_poly(P("x*x*y^2", ring)) == "x^2*y^2");
    CHECK(format_poly(P("-x", ring)) == "-x");
    CHECK(format_poly(P("7/3", ring)) == "7/3");
}

TEST_CASE("exponentiation binds tighter than unary minus") {
    auto ring = ring_xyz();
    CHECK(parse_poly("-x^2", ring) == -P("x^2", ring));
    CHECK(parse_poly("(-x)^2", ring) == P("x^2", ring));
    CHECK(parse_poly("-x^2 + x^2", ring).is_zero());
}

TEST_CASE("no implicit multiplication") {
    auto ring = ring_xyz();
    try {
        parse_poly("2z", ring);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
        CHECK(e.expected() == "end of input");
        CHECK(e.found() == "identifier 'z'");
    }
    CHECK_THROWS_AS(parse_poly("2 z", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x y", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("(x)(y)", ring), ParseError);
}

TEST_CASE("zero denominator is rejected") {
    auto ring = ring_xyz();
    try {
        parse_poly("1/0", ring);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.expected() == "a nonzero denominator");
    }
    CHECK_THROWS_AS(parse_poly("x + 3/0", ring), ParseError);
    // A denominator that cancels is still fine.
    CHECK(parse_poly("4/2", ring) == P("2", ring));
}

TEST_CASE("unknown variables carry the offset of the identifier") {
    auto ring = ring_xyz();
    try {
        parse_poly("x + w^2", ring);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
        CHECK(e.expected() == "a ring variable");
        CHECK(e.found() == "identifier 'w'");
    }
    try {
        parse_poly("x1", ring); // prefix of nothing in {x, y, z}
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 0);
        CHECK(e.found() == "identifier 'x1'");
    }
}

TEST_CASE("exponent cap") {
    auto rx = make_ring({"x"});
    Polynomial big = parse_poly("x^65535", rx);
    CHECK(big.term_count() == 1);
    CHECK(big.leading_monomial(MonomialOrder::Degrevlex).total_degree() == 65535);
    try {
        parse_poly("x^65536", rx);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.expected() == "an exponent not exceeding 65535");
    }
    ParseOptions tight;
    tight.max_exponent = 8;
    CHECK_THROWS_AS(parse_poly("x^9", rx, tight), ParseError);
    CHECK(parse_poly("x^8", rx, tight).term_count() == 1);
}

TEST_CASE("nesting depth cap") {
    auto ring = ring_xyz();
    std::string deep(300, '(');
    deep += "x";
    deep += std::string(300, ')');
    CHECK_THROWS_AS(parse_poly(deep, ring), ParseError);
    std::string ok(200, '(');
    ok += "x";
    ok += std::string(200, ')');
    CHECK(parse_poly(ok, ring) == P("x", ring));
    // Unary minus consumes depth as well.
    CHECK_THROWS_AS(parse_poly(std::string(300, '-') + "x", ring), ParseError);
    ParseOptions shallow;
    shallow.max_depth = 4;
    CHECK(parse_poly("----x", ring, shallow) == P("x", ring));
    CHECK_THROWS_AS(parse_poly("-----x", ring, shallow), ParseError);
}

TEST_CASE("assorted grammar corners") {
    auto ring = ring_xyz();
    CHECK(parse_poly("--x", ring) == P("x", ring));
    CHECK(parse_poly("2^3", ring) == Polynomial::constant(ring, 8));
    CHECK(parse_poly("x^0", ring) == Polynomial::constant(ring, 1));
    CHECK(parse_poly("0^0", ring) == Polynomial::constant(ring, 1)); // empty product
    CHECK(parse_poly("x*-y", ring) == -P("x*y", ring));
    CHECK(parse_poly("(x + y)^2", ring) == P("x^2 + 2*x*y + y^2", ring));
    CHECK(parse_poly("3/2*x", ring) == P("x", ring).scaled(Rational(3) / 2));
    CHECK_THROWS_AS(parse_poly("", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("   ", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x )", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x^2^2", ring), ParseError); // no exponent chains
    CHECK_THROWS_AS(parse_poly("x^-2", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x^(2)", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("1/2/3", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("1.5", ring), ParseError); // no decimal literals
    CHECK_THROWS_AS(parse_poly("+x", ring), ParseError);  // no unary plus
}

TEST_CASE("huge integer coefficients survive exactly") {
    auto ring = ring_xyz();
    std::string text = "123456789012345678901234567890*x - 1/98765432109876543210987654321";
    Polynomial p = parse_poly(text, ring);
    CHECK(format_poly(p) == text);
    CHECK(parse_poly(format_poly(p), ring) == p);
}

TEST_CASE("constants in a zero-variable ring") {
    auto ring = make_ring({});
    CHECK(parse_poly("3/4 - 1/4", ring) == Polynomial::constant(ring, Rational(1) / 2));
    CHECK_THROWS_AS(parse_poly("x", ring), ParseError);
}

TEST_CASE("round-trip: format then parse is the identity") {
    std::mt19937_64 rng(20260819);
    std::vector<RingPtr> rings = {
        make_ring({}),
        make_ring({"t"}),
        make_ring({"x", "y"}),
        ring_xyz(),
        make_ring({"x1", "x2", "x3", "x4"}),
    };
    int trips = 0;
    for (int t = 0; t < 1200; ++t) {
        const RingPtr& ring = rings[t % rings.size()];
        Polynomial p = random_poly(rng, ring, 5, 7);
        std::string text = format_poly(p);
        Polynomial back = parse_poly(text, ring);
        REQUIRE(back == p);
        // Canonical text is a fixed point of another round.
        REQUIRE(format_poly(back) == text);
        ++trips;
    }
    CHECK(trips == 1200);
}

TEST_CASE("parsing is deterministic") {
    auto ring = ring_xyz();
    std::string text = "1 - x^2 - y^2 - z^2";
    Polynomial a = parse_poly(text, ring);
    Polynomial b = parse_poly(text, ring);
    CHECK(a == b);
    CHECK(format_poly(a) == format_poly(b));
}

namespace {

// Exercises the parser on hostile input; anything other than a clean parse or
// a ParseError is a defect.
int fuzz_one(const std::string& text, const RingPtr& ring) {
    try {
        Polynomial p = parse_poly(text, ring);
        // When a fuzz string happens to parse, its canonical form must
        // round-trip.
        if (parse_poly(format_poly(p), ring) != p) return 2;
        return 1;
    } catch (const ParseError&) {
        return 0;
    }
}

} // namespace

TEST_CASE("fuzz: random byte strings never crash the parser") {
    auto ring = ring_xyz();
    std::mt19937_64 rng(424242);
    int parsed = 0, rejected = 0;
    for (int t = 0; t < 1500; ++t) {
        std::size_t len = rng() % 80;
        std::string text;
        for (std::size_t i = 0; i < len; ++i)
            text.push_back(static_cast<char>(rng() % 95 + 32)); // printable ASCII
        int outcome = fuzz_one(text, ring);
        REQUIRE(outcome != 2);
        (outcome == 1 ? parsed : rejected)++;
    }
    CHECK(parsed + rejected == 1500);
    CHECK(rejected > 0);
}

TEST_CASE("fuzz: token soup never crashes the parser") {
    auto ring = ring_xyz();
    std::mt19937_64 rng(777);
    const std::vector<std::string> tokens = {
        "x", "y",  "z", "w", "+", "-", "*", "^", "(",     ")",    "/",  " ",
        "0", "1",  "2", "3", "7", "9", "13", "65536",     "x^",   "((", "))",
        "-(", ")*", "1/", "/0", "^2", "2*", "x^65535",    "_",    ".",
    };
    int parsed = 0, rejected = 0;
    for (int t = 0; t < 1500; ++t) {
        std::size_t len = rng() % 24;
        std::string text;
        for (std::size_t i = 0; i < len; ++i) text += tokens[rng() % tokens.size()];
        int outcome = fuzz_one(text, ring);
        REQUIRE(outcome != 2);
        (outcome == 1 ? parsed : rejected)++;
    }
    CHECK(parsed + rejected == 1500);
    CHECK(parsed > 0);   // the soup does produce some valid expressions
    CHECK(rejected > 0); // and plenty of invalid ones
}
