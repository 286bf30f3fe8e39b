#pragma once

#include <string>
#include <string_view>

#include "shv/algebra.hpp"
#include "shv/scalar_io.hpp"

namespace shv {

inline std::string to_string(const BasisSymbol& s, const Context&) {
    switch (s.kind) {
        case SymbolKind::C1: return "C1";
        case SymbolKind::C2: return "C2";
        case SymbolKind::C3: return "C3";
        default: break;
    }
    std::string out = s.kind == SymbolKind::E ? "E[" : "H[";
    for (int i = 0; i < s.alpha.dim(); ++i)
        out += (i ? "," : "") + std::to_string(s.alpha.c[static_cast<std::size_t>(i)]);
    return out + "]";
}

inline std::string to_string(const AlgebraElement& el, const Context& ctx) {
    if (el.empty()) return "0";
    std::string out;
    for (auto& [s, c] : el) {
        std::string coeff;
        bool neg = false;
        if (scalar_eq(c, Scalar::one())) {
            coeff = "";
        } else if (scalar_eq(c, Scalar(-1))) {
            coeff = "";
            neg = true;
        } else {
            Scalar v = c;
            // pull a leading minus out of a single-term numerator
            if (v.den() == Polynomial::one() && v.num().term_count() == 1 &&
                v.num().leading_coefficient() < 0) {
                neg = true;
                v = -v;
            }
            coeff = to_string(v, ctx);
            if (v.den() != Polynomial::one() || v.num().term_count() > 1) coeff = "(" + coeff + ")";
            coeff += "*";
        }
        std::string piece = coeff + to_string(s, ctx);
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

namespace detail {

/// Element grammar: sum of terms; each term is a product of scalar factors
/// and exactly one basis symbol E[..] / H[..] / C1 / C2 / C3.
class ElementParser {
public:
    ElementParser(std::string_view src, const Context& ctx) : p_(src, ctx), ctx_(ctx) {}

    AlgebraElement parse() {
        AlgebraElement out;
        p_.skip_ws();
        bool neg = false;
        if (p_.peek() == '-') { neg = true; ++p_.pos_; }
        else if (p_.peek() == '+') ++p_.pos_;
        term(out, neg);
        for (;;) {
            p_.skip_ws();
            if (p_.peek() == '+') { ++p_.pos_; term(out, false); }
            else if (p_.peek() == '-') { ++p_.pos_; term(out, true); }
            else break;
        }
        p_.skip_ws();
        if (p_.pos_ != p_.src_.size()) throw SyntaxError("trailing input", p_.pos_);
        return out;
    }

private:
    void term(AlgebraElement& out, bool neg) {
        Scalar coeff = Scalar::one();
        std::optional<BasisSymbol> sym;
        for (;;) {
            p_.skip_ws();
            std::size_t save = p_.pos_;
            if (auto s = try_symbol()) {
                if (sym) throw SyntaxError("second basis symbol in one term", save);
                sym = *s;
            } else {
                coeff *= p_.factor();
            }
            p_.skip_ws();
            while (p_.peek() == '/') {
                std::size_t at = p_.pos_;
                ++p_.pos_;
                p_.skip_ws();
                if (try_symbol()) throw SyntaxError("cannot divide by a basis symbol", at);
                Scalar d = p_.factor();
                if (d.is_zero()) throw DivisionByZeroScalar();
                coeff /= d;
                p_.skip_ws();
            }
            if (p_.peek() == '*') { ++p_.pos_; continue; }
            break;
        }
        if (!sym) {
            // a bare scalar is only legal when it is zero ("0" is the
            // canonical print of the zero element)
            if (coeff.is_zero()) return;
            throw SyntaxError("term has no basis symbol", p_.pos_);
        }
        add_term(out, *sym, neg ? -coeff : coeff);
    }

    std::optional<BasisSymbol> try_symbol() {
        std::size_t save = p_.pos_;
        if (!std::isalpha(static_cast<unsigned char>(p_.peek()))) return std::nullopt;
        std::string name = p_.identifier();
        if (name == "C1") return BasisSymbol::c1();
        if (name == "C2") return BasisSymbol::c2();
        if (name == "C3") return BasisSymbol::c3();
        if ((name == "E" || name == "H")) {
            p_.skip_ws();
            if (p_.peek() == '[') {
                LatticeVector a = index_list();
                return name == "E" ? BasisSymbol::e(a) : BasisSymbol::h(a);
            }
        }
        p_.pos_ = save;
        return std::nullopt;
    }

    LatticeVector index_list() {
        std::size_t open = p_.pos_;
        ++p_.pos_; // '['
        std::vector<std::int64_t> v;
        for (;;) {
            p_.skip_ws();
            bool neg = false;
            if (p_.peek() == '-') { neg = true; ++p_.pos_; }
            p_.skip_ws();
            Integer i = p_.integer_literal();
            v.push_back(neg ? -static_cast<std::int64_t>(i.convert_to<std::int64_t>())
                            : i.convert_to<std::int64_t>());
            p_.skip_ws();
            if (p_.peek() == ',') { ++p_.pos_; continue; }
            if (p_.peek() == ']') { ++p_.pos_; break; }
            throw SyntaxError("expected ',' or ']'", p_.pos_);
        }
        if (static_cast<int>(v.size()) != ctx_.n())
            throw DimensionMismatch("symbol index arity " + std::to_string(v.size()) +
                                    " does not match n = " + std::to_string(ctx_.n()) +
                                    " (at offset " + std::to_string(open) + ")");
        return LatticeVector(std::move(v));
    }

    ScalarParser p_;
    const Context& ctx_;
};

} // namespace detail

inline AlgebraElement parse_element(std::string_view text, const Context& ctx) {
    return detail::ElementParser(text, ctx).parse();
}

} // namespace shv
