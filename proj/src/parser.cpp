#include "frameinv/parser.hpp"

#include <cctype>
#include <sstream>

namespace frameinv {

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : ValidationError("parse error at offset " + std::to_string(offset) + ": expected " +
                      expected + ", found " + found),
      offset_(offset), expected_(std::move(expected)), found_(std::move(found)) {}

namespace {

class Parser {
  public:
    Parser(const std::string& text, const RingPtr& ring, const ParseOptions& options)
        : text_(text), ring_(ring), options_(options) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        skip_ws();
        if (!at_end()) fail("end of input");
        return p;
    }

  private:
    const std::string& text_;
    const RingPtr& ring_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }

    [[noreturn]] void fail_at(std::size_t offset, const std::string& expected) const {
        throw ParseError(offset, expected, describe_at(offset));
    }

    std::string describe_at(std::size_t offset) const {
        if (offset >= text_.size()) return "end of input";
        char c = text_[offset];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = offset;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            return "identifier '" + text_.substr(offset, end - offset) + "'";
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = offset;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            return "number '" + text_.substr(offset, end - offset) + "'";
        }
        if (std::isprint(static_cast<unsigned char>(c))) return std::string("'") + c + "'";
        std::ostringstream os;
        os << "byte 0x" << std::hex << static_cast<unsigned>(static_cast<unsigned char>(c));
        return os.str();
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > parser.options_.max_depth)
                parser.fail("expression nested at most " +
                            std::to_string(parser.options_.max_depth) + " levels deep");
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    // expr := term (('+'|'-') term)*
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            skip_ws();
            if (at_end()) return acc;
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    // term := factor ('*' factor)*
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    // factor := '-' factor | base ('^' natural)?
    // '^' binds tighter than unary minus: "-x^2" is -(x^2).
    Polynomial parse_factor() {
        skip_ws();
        if (!at_end() && peek() == '-') {
            DepthGuard guard(*this);
            ++pos_;
            return -parse_factor();
        }
        Polynomial base = parse_base();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = parse_natural_capped();
            return power(base, e);
        }
        return base;
    }

    // base := rational | variable | '(' expr ')'
    Polynomial parse_base() {
        skip_ws();
        if (at_end()) fail("a number, variable, or '('");
        char c = peek();
        if (c == '(') {
            DepthGuard guard(*this);
            ++pos_;
            Polynomial inner = parse_expr();
            skip_ws();
            if (at_end() || peek() != ')') fail("')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail("a number, variable, or '('");
    }

    Polynomial parse_variable() {
        std::size_t start = pos_;
        while (!at_end() &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        std::size_t index = ring_->index_of(name);
        if (index == Ring::npos) fail_at(start, "a ring variable");
        return Polynomial::variable(ring_, index);
    }

    // rational := natural ('/' natural)?, with a nonzero denominator
    Polynomial parse_rational() {
        mpz_class num = parse_integer_digits();
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_start = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("denominator digits");
            den = parse_integer_digits();
            if (den == 0) fail_at(den_start, "a nonzero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, q);
    }

    mpz_class parse_integer_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    unsigned long parse_natural_capped() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("exponent digits");
        std::size_t start = pos_;
        mpz_class value = parse_integer_digits();
        if (value > static_cast<unsigned long>(options_.max_exponent))
            fail_at(start, "an exponent not exceeding " + std::to_string(options_.max_exponent));
        return value.get_ui();
    }

    Polynomial power(const Polynomial& base, unsigned long e) {
        Polynomial result = Polynomial::constant(ring_, 1);
        Polynomial acc = base;
        while (e > 0) {
            if (e & 1UL) result = result * acc;
            e >>= 1UL;
            if (e > 0) acc = acc * acc;
        }
        return result;
    }
};

} // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring, const ParseOptions& options) {
    return Parser(text, ring, options).run();
}

std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Ring& ring = *p.ring();
    std::string out;
    // Terms descending in the canonical order.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        const bool negative = sign(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Rational abs_c = negative ? Rational(-c) : c;
        std::string mono;
        for (std::size_t v = 0; v < m.exponents.size(); ++v) {
            if (m.exponents[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.variable(v);
            if (m.exponents[v] > 1) mono += "^" + std::to_string(m.exponents[v]);
        }
        if (mono.empty()) {
            out += to_string(abs_c);
        } else if (abs_c == 1) {
            out += mono;
        } else {
            out += to_string(abs_c) + "*" + mono;
        }
    }
    return out;
}

} // namespace frameinv
