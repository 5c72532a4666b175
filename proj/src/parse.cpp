#include "qforms/parse.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace qforms {

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error("parse error at column " + std::to_string(pos) + ": " + message),
      position(pos) {}

namespace {

// Cap on the degree of any intermediate result, so "t^9^9^9" style inputs
// fail fast instead of exhausting memory.
constexpr int kMaxDegree = 60000;

class Parser {
public:
    Parser(std::string_view text, const Fq& field) : text_(text), field_(field) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    const Fq& field_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*')) {
            acc = acc * factor();
            if (acc.degree() > kMaxDegree) fail("intermediate degree too large");
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        while (eat('^')) base = power(std::move(base), integer_literal("exponent"));
        return base;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 't' || c == 'T') {
            ++pos_;
            return Poly::variable(field_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = integer_literal("integer");
            return Poly::constant(field_,
                                  static_cast<std::int64_t>(v % static_cast<std::uint64_t>(field_.q())));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::uint64_t integer_literal(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        std::uint64_t value = 0;
        auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc()) {
            pos_ = start;
            fail(std::string(what) + " out of range");
        }
        return value;
    }

    Poly power(Poly base, std::uint64_t e) {
        if (base.degree() > 0 && e > static_cast<std::uint64_t>(kMaxDegree / base.degree()))
            fail("exponent too large");
        Poly result = Poly::one(field_);
        Poly sq = std::move(base);
        while (e > 0) {
            if (e & 1) result = result * sq;
            e >>= 1;
            if (e > 0) sq = sq * sq;
        }
        return result;
    }
};

}  // namespace

Poly parse_poly(std::string_view text, const Fq& field) {
    Parser p(text, field);
    return p.parse();
}

}  // namespace qforms
