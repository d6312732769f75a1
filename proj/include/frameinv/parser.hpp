#pragma once

#include <cstddef>
#include <string>

#include "frameinv/polynomial.hpp"

namespace frameinv {

// Reported when text does not conform to the polynomial grammar. The offset
// is a byte position into the input (== input length for end-of-input).
class ParseError : public ValidationError {
  public:
    ParseError(std::size_t offset, std::string expected, std::string found);

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

  private:
    std::size_t offset_;
    std::string expected_;
    std::string found_;
};

struct ParseOptions {
    // Maximum nesting depth of parenthesised / negated subexpressions.
    std::size_t max_depth = 256;
    // Maximum value accepted after '^'.
    unsigned long max_exponent = 65535;
};

// Parses the fixed polynomial grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' natural)?
//   base   := rational | variable | '(' expr ')'
//   rational := natural ('/' natural)?
// No implicit multiplication. '^' binds tighter than unary minus, so
// "-x^2" is -(x^2). A zero denominator is a parse error.
Polynomial parse_poly(const std::string& text, const RingPtr& ring,
                      const ParseOptions& options = {});

// Canonical rendering: terms in descending graded-reverse-lexicographic
// order, explicit '*' and '^', coefficients as exact rationals, leading sign
// folded ("-75/2*z - 24"). parse_poly(format_poly(p)) == p.
std::string format_poly(const Polynomial& p);

} // namespace frameinv
