#pragma once

#include <set>
#include <vector>

#include "shv/algebra.hpp"

namespace shv {

/// Intermediate-series module T_mu(a,b,F). Basis vectors are indexed by
/// kappa in Z^n; the scalar label mu.kappa + a is display-only, so labels
/// never collide even when a lies in Gamma_mu. quotient_v0 models
/// T(0,0,0)/Cv0 and requires a = b = F = 0.
struct TModuleSpec {
    int n;
    Scalar a, b, F;
    bool quotient_v0 = false;

    void validate(const Context& ctx) const {
        if (n != ctx.n()) throw DimensionMismatch("module dimension differs from context");
        if (quotient_v0 && !(a.is_zero() && b.is_zero() && F.is_zero()))
            throw std::invalid_argument("quotient_v0 requires a = b = F = 0");
    }
};

/// Finite sum of basis vectors v_kappa with Scalar coefficients.
using TVector = std::map<LatticeVector, Scalar>;

inline void add_term(TVector& v, const LatticeVector& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline TVector& operator+=(TVector& a, const TVector& b) {
    for (auto& [k, c] : b) add_term(a, k, c);
    return a;
}

inline TVector scaled(const TVector& v, const Scalar& c) {
    TVector r;
    if (c.is_zero()) return r;
    for (auto& [k, s] : v) r.emplace(k, s * c);
    return r;
}

/// Action of a basis symbol: e_alpha.v_k = (a + mu.k + b mu.alpha) v_{k+alpha},
/// h_alpha.v_k = F v_{k+alpha}, centers act by 0.
inline TVector t_act_basis(const Context& ctx, const TModuleSpec& spec,
                           const BasisSymbol& x, const LatticeVector& kappa) {
    spec.validate(ctx);
    TVector out;
    if (x.central()) return out;
    if (kappa.dim() != ctx.n() || x.alpha.dim() != ctx.n()) throw DimensionMismatch();
    if (spec.quotient_v0 && kappa.is_zero()) return out;
    LatticeVector target = kappa + x.alpha;
    if (spec.quotient_v0 && target.is_zero()) return out;
    Scalar coeff = x.kind == SymbolKind::E
                       ? spec.a + mu_form(ctx, kappa) + spec.b * mu_form(ctx, x.alpha)
                       : spec.F;
    add_term(out, target, coeff);
    return out;
}

inline TVector t_act(const Context& ctx, const TModuleSpec& spec,
                     const AlgebraElement& x, const TVector& v) {
    TVector out;
    for (auto& [s, cx] : x)
        for (auto& [k, cv] : v) {
            TVector part = t_act_basis(ctx, spec, s, k);
            for (auto& [k2, c2] : part) add_term(out, k2, c2 * cx * cv);
        }
    return out;
}

/// [x,y].v_k - (x.(y.v_k) - y.(x.v_k)); identically zero witnesses the module
/// axioms with a, b, F symbolic.
inline TVector t_axiom_defect(const Context& ctx, const TModuleSpec& spec,
                              const BasisSymbol& x, const BasisSymbol& y,
                              const LatticeVector& kappa) {
    AlgebraElement ex{{x, Scalar::one()}}, ey{{y, Scalar::one()}};
    TVector vk{{kappa, Scalar::one()}};
    TVector lhs = t_act(ctx, spec, bracket(ctx, AlgebraVariant::HVir, ex, ey), vk);
    TVector rhs = t_act(ctx, spec, ex, t_act(ctx, spec, ey, vk));
    rhs += scaled(t_act(ctx, spec, ey, t_act(ctx, spec, ex, vk)), Scalar(-1));
    lhs += scaled(rhs, Scalar(-1));
    return lhs;
}

struct TSubmoduleReport {
    /// Proper nonzero invariant subspaces of the window span, each given by
    /// the kappa-support, lex ascending. Invariance is relative to the window:
    /// images escaping the window are counted as edge effects, not failures.
    std::vector<std::vector<LatticeVector>> subspaces;
    std::size_t edge_effects = 0;
};

/// Windowed reducibility probe. Since every weight space is one-dimensional
/// and generators map basis vectors to scalar multiples of basis vectors, any
/// invariant subspace of the window is spanned by basis vectors; candidates
/// are the reachability closures of single vertices.
inline TSubmoduleReport t_submodule_window(const Context& ctx, const TModuleSpec& spec, int B) {
    spec.validate(ctx);
    TSubmoduleReport report;
    auto window = lattice_window(ctx.n(), B);
    std::set<LatticeVector> inside(window.begin(), window.end());
    if (spec.quotient_v0) inside.erase(LatticeVector::zero(ctx.n()));

    auto generators = lattice_window(ctx.n(), B);
    auto closure = [&](const LatticeVector& start) {
        std::set<LatticeVector> seen{start};
        std::vector<LatticeVector> todo{start};
        while (!todo.empty()) {
            LatticeVector k = todo.back();
            todo.pop_back();
            for (auto& alpha : generators)
                for (auto kind : {SymbolKind::E, SymbolKind::H}) {
                    BasisSymbol s{kind, alpha};
                    TVector img = t_act_basis(ctx, spec, s, k);
                    for (auto& [k2, c] : img) {
                        if (!inside.count(k2)) {
                            ++report.edge_effects;
                            continue;
                        }
                        if (seen.insert(k2).second) todo.push_back(k2);
                    }
                }
        }
        return seen;
    };

    std::set<std::set<LatticeVector>> found;
    for (auto& k : inside) {
        auto cl = closure(k);
        if (cl.size() < inside.size()) found.insert(std::move(cl));
    }
    for (auto& cl : found)
        report.subspaces.emplace_back(cl.begin(), cl.end());
    std::sort(report.subspaces.begin(), report.subspaces.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return report;
}

} // namespace shv
