#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "shv/context.hpp"
#include "shv/scalar.hpp"

namespace shv {

inline std::string to_string(const Monomial& m, const Context& ctx) {
    std::string out;
    for (auto& [id, e] : m.exponents()) {
        if (!out.empty()) out += "*";
        out += ctx.name_of(id);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

/// Terms printed in descending graded-lex order, signs folded into the join.
inline std::string to_string(const Polynomial& p, const Context& ctx) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string piece;
        if (m.is_one()) piece = to_string(c);
        else if (c == 1) piece = to_string(m, ctx);
        else piece = to_string(c) + "*" + to_string(m, ctx);
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

namespace detail {
inline bool needs_parens_as_factor(const Polynomial& p) {
    if (p.term_count() != 1) return true;
    auto& [m, c] = *p.terms().begin();
    if (c < 0) return true;
    // a bare rational or a bare power is safe unparenthesized
    if (m.is_one()) return denominator(c) != 1;
    return c != 1 || m.exponents().size() > 1;
}
} // namespace detail

inline std::string to_string(const Scalar& s, const Context& ctx) {
    if (s.den() == Polynomial::one()) return to_string(s.num(), ctx);
    std::string num = to_string(s.num(), ctx);
    std::string den = to_string(s.den(), ctx);
    // a single-term numerator binds fine on the left of '/'
    if (s.num().term_count() > 1) num = "(" + num + ")";
    if (detail::needs_parens_as_factor(s.den())) den = "(" + den + ")";
    return num + "/" + den;
}

namespace detail {

/// Recursive-descent parser for the scalar grammar: rationals, declared
/// indeterminates, + - * / ^ and parentheses; whitespace insensitive.
class ScalarParser {
public:
    ScalarParser(std::string_view src, const Context& ctx) : src_(src), ctx_(ctx) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
        return v;
    }

private:
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { ++pos_; v += term(); }
            else if (peek() == '-') { ++pos_; v -= term(); }
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; v *= factor(); }
            else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                Scalar d = factor();
                if (d.is_zero()) { pos_ = at; throw DivisionByZeroScalar(); }
                v /= d;
            } else return v;
        }
    }

    Scalar factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        Scalar v = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected nonnegative integer exponent", pos_);
            int e = static_cast<int>(integer_literal());
            v = v.pow(e);
        }
        return neg ? -v : v;
    }

    Scalar primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Scalar(Rational(integer_literal()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            return Scalar::variable(ctx_.id_of(name));
        }
        throw SyntaxError("expected number, name or '('", pos_);
    }

    Integer integer_literal() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected integer", pos_);
        return Integer(std::string(src_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    std::string_view src_;
    const Context& ctx_;
    std::size_t pos_ = 0;

    friend class ElementParser;
};

} // namespace detail

inline Scalar parse_scalar(std::string_view text, const Context& ctx) {
    return detail::ScalarParser(text, ctx).parse();
}

/// Evaluation by name, with readable errors.
inline Rational scalar_eval(const Scalar& s, const Context& ctx,
                            const std::map<std::string, Rational>& at) {
    std::map<int, Rational> ids;
    for (auto& [name, v] : at) ids.emplace(ctx.id_of(name), v);
    for (int id : s.num().indeterminates())
        if (!ids.count(id)) throw MissingAssignment(ctx.name_of(id));
    for (int id : s.den().indeterminates())
        if (!ids.count(id)) throw MissingAssignment(ctx.name_of(id));
    return s.evaluate(ids);
}

} // namespace shv
