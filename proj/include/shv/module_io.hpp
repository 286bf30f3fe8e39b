#pragma once

#include <string>

#include "shv/element_io.hpp"
#include "shv/genverma.hpp"
#include "shv/repmod.hpp"
#include "shv/verma.hpp"

namespace shv {

namespace detail {

// Coefficient prefix for a module term; pulls out a leading minus so sums
// print as "a - b" rather than "a + -b".
inline std::pair<std::string, bool> coefficient_prefix(const Scalar& c, const Context& ctx) {
    if (scalar_eq(c, Scalar::one())) return {"", false};
    if (scalar_eq(c, Scalar(-1))) return {"", true};
    Scalar v = c;
    bool neg = false;
    if (v.den() == Polynomial::one() && v.num().term_count() == 1 &&
        v.num().leading_coefficient() < 0) {
        neg = true;
        v = -v;
    }
    std::string s = to_string(v, ctx);
    if (v.den() != Polynomial::one() || v.num().term_count() > 1) s = "(" + s + ")";
    return {s + "*", neg};
}

template <class Terms, class KeyPrinter>
std::string print_module_element(const Terms& terms, const Context& ctx, KeyPrinter&& key) {
    std::string out;
    for (auto& [k, c] : terms) {
        if (c.is_zero()) continue;
        auto [coeff, neg] = coefficient_prefix(c, ctx);
        std::string piece = coeff + key(k);
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

inline std::string to_string(const LatticeVector& a) {
    std::string s = "[";
    for (int i = 0; i < a.dim(); ++i)
        s += (i ? "," : "") + std::to_string(a.c[static_cast<std::size_t>(i)]);
    return s + "]";
}

inline std::string to_string(const TVector& v, const Context& ctx) {
    return detail::print_module_element(v, ctx,
                                        [](const LatticeVector& k) { return "v" + to_string(k); });
}

inline std::string to_string(const PBWFactor& f, const Context& ctx) {
    return to_string(BasisSymbol{f.kind, f.alpha}, ctx);
}

/// PBW monomial applied to the highest-weight vector: "E[-1,0].H[0,-1].v".
inline std::string to_string(const PBWMonomial& m, const Context& ctx) {
    std::string s;
    for (auto& f : m.f) s += to_string(f, ctx) + ".";
    return s + "v";
}

inline std::string to_string(const VermaVector& v, const Context& ctx) {
    return detail::print_module_element(v, ctx,
                                        [&](const PBWMonomial& m) { return to_string(m, ctx); });
}

/// Generalized Verma term: PBW part applied to a T-module vector, e.g.
/// "E[-1,0].v[2]".
inline std::string to_string(const GenVermaVector& v, const Context& ctx) {
    return detail::print_module_element(v, ctx, [&](const auto& key) {
        std::string s;
        for (auto& f : key.first.f) s += to_string(f, ctx) + ".";
        return s + "v" + to_string(key.second);
    });
}

} // namespace shv
