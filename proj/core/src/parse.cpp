#include "symchar2/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <string>

namespace symchar2 {

namespace {

class Parser {
public:
    Parser(const Field& field, std::string_view text) : field_(field), text_(text) {}

    Poly parse_expression_only() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

    std::vector<ClaimedFactor> parse_factor_list() {
        std::vector<ClaimedFactor> out;
        for (;;) {
            Poly base = primary();
            unsigned e = 1;
            if (accept('^')) {
                const long long v = integer();
                if (v < 1) fail("factor multiplicity must be >= 1");
                e = static_cast<unsigned>(v);
            }
            out.push_back({std::move(base), e});
            skip_ws();
            if (pos_ == text_.size()) break;
            expect('*');
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::ParseError, why + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (std::numeric_limits<long long>::max() - 9) / 10) fail("integer too large");
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+') || accept('-')) {
                acc += term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero expression");
                acc = acc * d.coeff(0).inv();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return unary();
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const long long e = integer();
        if (negative) {
            if (!base.is_constant() || base.is_zero()) fail("negative exponent on a non-constant or zero expression");
            return Poly::constant(base.coeff(0).pow(-e));
        }
        if (e > 1 << 20) fail("exponent too large");
        return pow(base, static_cast<unsigned>(e));
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const long long v = integer();
            if (v > std::numeric_limits<std::uint32_t>::max()) fail("constant too large");
            try {
                return Poly::constant(field_.from_bits(static_cast<std::uint32_t>(v)));
            } catch (const Error& e) {
                fail(e.what());
            }
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return Poly::x(field_);
        }
        if (c == 't') {
            ++pos_;
            if (field_.kind() != FieldKind::RationalFunction) fail("'t' used outside a function field");
            return Poly::constant(field_.t());
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const Field& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& field, std::string_view text) {
    try {
        return Parser(field, text).parse_expression_only();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Scalar parse_scalar(const Field& field, std::string_view text) {
    Poly p = parse_poly(field, text);
    if (!p.is_constant()) throw Error(ErrorCode::ParseError, "expected a scalar, got polynomial '" + std::string(text) + "'");
    return p.coeff(0);
}

std::vector<ClaimedFactor> parse_factored(const Field& field, std::string_view text) {
    try {
        return Parser(field, text).parse_factor_list();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace symchar2
