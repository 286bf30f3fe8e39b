#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "shv/lattice.hpp"

namespace shv {

enum class AlgebraVariant { SolWitt, WA, HVir };

enum class SymbolKind : int { E = 0, H = 1, C1 = 2, C2 = 3, C3 = 4 };

/// Basis symbol of HVir(n)_mu: E(alpha) = t^alpha d_mu, H(alpha) = t^alpha,
/// plus the three central elements. Central symbols carry no index.
struct BasisSymbol {
    SymbolKind kind;
    LatticeVector alpha; // empty for central symbols

    static BasisSymbol e(LatticeVector a) { return {SymbolKind::E, std::move(a)}; }
    static BasisSymbol h(LatticeVector a) { return {SymbolKind::H, std::move(a)}; }
    static BasisSymbol c1() { return {SymbolKind::C1, {}}; }
    static BasisSymbol c2() { return {SymbolKind::C2, {}}; }
    static BasisSymbol c3() { return {SymbolKind::C3, {}}; }

    bool central() const { return kind != SymbolKind::E && kind != SymbolKind::H; }

    auto operator<=>(const BasisSymbol&) const = default;
};

/// Finite formal sum of basis symbols with Scalar coefficients. Zero
/// coefficients are never stored.
using AlgebraElement = std::map<BasisSymbol, Scalar>;

inline void add_term(AlgebraElement& el, const BasisSymbol& s, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = el.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) el.erase(it);
    }
}

inline AlgebraElement& operator+=(AlgebraElement& a, const AlgebraElement& b) {
    for (auto& [s, c] : b) add_term(a, s, c);
    return a;
}

inline AlgebraElement scaled(const AlgebraElement& a, const Scalar& c) {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (auto& [s, v] : a) r.emplace(s, v * c);
    return r;
}

inline bool is_zero(const AlgebraElement& a) { return a.empty(); }

inline bool admits(AlgebraVariant variant, const BasisSymbol& s) {
    switch (variant) {
        case AlgebraVariant::SolWitt: return s.kind == SymbolKind::E;
        case AlgebraVariant::WA: return s.kind == SymbolKind::E || s.kind == SymbolKind::H;
        case AlgebraVariant::HVir: return true;
    }
    return false;
}

inline void check_variant(AlgebraVariant variant, const AlgebraElement& x) {
    for (auto& [s, c] : x)
        if (!admits(variant, s)) throw VariantMismatch();
}

/// Bracket of two basis symbols. Central terms appear only for HVir; the
/// delta_{alpha,-beta} tests are exact integer comparisons on indices.
inline AlgebraElement bracket_basis(const Context& ctx, AlgebraVariant variant,
                                    const BasisSymbol& x, const BasisSymbol& y) {
    AlgebraElement out;
    if (x.central() || y.central()) return out;
    const bool central_terms = variant == AlgebraVariant::HVir;
    const LatticeVector& a = x.alpha;
    const LatticeVector& b = y.alpha;
    if (x.kind == SymbolKind::E && y.kind == SymbolKind::E) {
        add_term(out, BasisSymbol::e(a + b), mu_form(ctx, b - a));
        if (central_terms && (a + b).is_zero() && !a.is_zero()) {
            Scalar ma = mu_form(ctx, a);
            add_term(out, BasisSymbol::c1(), (ma.pow(3) - ma) / Scalar(12));
        }
    } else if (x.kind == SymbolKind::E && y.kind == SymbolKind::H) {
        add_term(out, BasisSymbol::h(a + b), mu_form(ctx, b));
        if (central_terms && (a + b).is_zero() && !a.is_zero()) {
            Scalar ma = mu_form(ctx, a);
            add_term(out, BasisSymbol::c2(), ma.pow(2) - ma);
        }
    } else if (x.kind == SymbolKind::H && y.kind == SymbolKind::E) {
        out = bracket_basis(ctx, variant, y, x);
        return scaled(out, Scalar(-1));
    } else { // H, H
        if (central_terms && (a + b).is_zero() && !a.is_zero())
            add_term(out, BasisSymbol::c3(), mu_form(ctx, a) / Scalar(3));
    }
    return out;
}

/// Bilinear extension of the basis bracket; validates both operands against
/// the variant first.
inline AlgebraElement bracket(const Context& ctx, AlgebraVariant variant,
                              const AlgebraElement& x, const AlgebraElement& y) {
    check_variant(variant, x);
    check_variant(variant, y);
    AlgebraElement out;
    for (auto& [sx, cx] : x)
        for (auto& [sy, cy] : y) {
            AlgebraElement b = bracket_basis(ctx, variant, sx, sy);
            for (auto& [s, c] : b) add_term(out, s, c * cx * cy);
        }
    return out;
}

/// Cyclic Jacobi sum [[x,y],z] + [[y,z],x] + [[z,x],y]; zero for a Lie algebra.
inline AlgebraElement jacobi_defect(const Context& ctx, AlgebraVariant variant,
                                    const AlgebraElement& x, const AlgebraElement& y,
                                    const AlgebraElement& z) {
    AlgebraElement out = bracket(ctx, variant, bracket(ctx, variant, x, y), z);
    out += bracket(ctx, variant, bracket(ctx, variant, y, z), x);
    out += bracket(ctx, variant, bracket(ctx, variant, z, x), y);
    return out;
}

/// Common Z^n-degree of all terms, with centers graded at 0; nullopt when the
/// element is not homogeneous. The zero element is homogeneous of degree 0.
inline std::optional<LatticeVector> degree_of(const Context& ctx, const AlgebraElement& x) {
    LatticeVector deg = LatticeVector::zero(ctx.n());
    bool first = true;
    for (auto& [s, c] : x) {
        LatticeVector d = s.central() ? LatticeVector::zero(ctx.n()) : s.alpha;
        if (first) {
            deg = d;
            first = false;
        } else if (!(d == deg)) {
            return std::nullopt;
        }
    }
    return deg;
}

/// Declared symbol family for a windowed closure check: E/H at arbitrary
/// index, plus any subset of the centers.
struct SymbolFamily {
    bool e_any = false;
    bool h_any = false;
    bool c1 = false, c2 = false, c3 = false;

    bool contains(const BasisSymbol& s) const {
        switch (s.kind) {
            case SymbolKind::E: return e_any;
            case SymbolKind::H: return h_any;
            case SymbolKind::C1: return c1;
            case SymbolKind::C2: return c2;
            case SymbolKind::C3: return c3;
        }
        return false;
    }
};

struct SubalgebraCounterexample {
    BasisSymbol x, y, escaping;
};

/// Checks closure of all pairwise brackets of the windowed family members.
/// Membership of a bracket term is decided by symbol shape with unconstrained
/// index, so window edge effects never produce false negatives.
inline std::optional<SubalgebraCounterexample> subalgebra_check(
    const Context& ctx, AlgebraVariant variant, const SymbolFamily& family, int B) {
    std::vector<BasisSymbol> gens;
    for (auto& a : lattice_window(ctx.n(), B)) {
        if (family.e_any) gens.push_back(BasisSymbol::e(a));
        if (family.h_any) gens.push_back(BasisSymbol::h(a));
    }
    if (family.c1) gens.push_back(BasisSymbol::c1());
    if (family.c2) gens.push_back(BasisSymbol::c2());
    if (family.c3) gens.push_back(BasisSymbol::c3());
    for (auto& x : gens)
        for (auto& y : gens) {
            AlgebraElement b = bracket_basis(ctx, variant, x, y);
            for (auto& [s, c] : b)
                if (!family.contains(s)) return SubalgebraCounterexample{x, y, s};
        }
    return std::nullopt;
}

} // namespace shv
