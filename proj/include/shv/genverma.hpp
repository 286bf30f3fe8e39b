#pragma once

#include <optional>

#include "shv/repmod.hpp"
#include "shv/verma.hpp"

namespace shv {

/// mu' . alpha' where alpha' lives in Z^{n-1} and mu' = (mu_2, ..., mu_n):
/// the linear form of the degree-0 subalgebra under the Z-grading by the
/// first coordinate.
inline Scalar mu_rest_form(const Context& ctx, const std::vector<std::int64_t>& alpha_rest) {
    if (static_cast<int>(alpha_rest.size()) != ctx.n() - 1) throw DimensionMismatch();
    if (ctx.mu_values) {
        LatticeVector full = LatticeVector::zero(ctx.n());
        for (std::size_t i = 0; i < alpha_rest.size(); ++i) full.c[i + 1] = alpha_rest[i];
        return mu_form(ctx, full);
    }
    Polynomial p;
    for (std::size_t i = 0; i < alpha_rest.size(); ++i)
        if (alpha_rest[i] != 0)
            p += Polynomial::term(Monomial::var(static_cast<int>(i) + 1), Rational(alpha_rest[i]));
    return Scalar(std::move(p));
}

namespace detail {

inline std::vector<std::int64_t> rest_of(const LatticeVector& a) {
    return std::vector<std::int64_t>(a.c.begin() + 1, a.c.end());
}

/// Wall of the generalized Verma module: generators with positive first
/// coordinate kill the T-module, first coordinate zero acts through the
/// embedding HVir(n-1)_{mu'} -> HVir(n)_mu on T_{mu'}(a,b,F), and centers
/// act by zero.
struct GenVermaPolicy {
    using State = LatticeVector; // kappa' in Z^{n-1}
    const TModuleSpec& tspec;    // n-1 dimensional, scalars over the big context

    Side classify(const BasisSymbol& g) const {
        std::int64_t j = g.alpha.c.front();
        if (j == 0) return Side::Wall;
        return j < 0 ? Side::Create : Side::Kill;
    }

    std::vector<std::pair<State, Scalar>> wall(const Context& ctx, const BasisSymbol& g,
                                               const State& kappa) const {
        auto ar = rest_of(g.alpha);
        State target = kappa;
        for (std::size_t i = 0; i < ar.size(); ++i) target.c[i] += ar[i];
        Scalar coeff = g.kind == SymbolKind::E
                           ? tspec.a + mu_rest_form(ctx, kappa.c) + tspec.b * mu_rest_form(ctx, ar)
                           : tspec.F;
        return {{target, coeff}};
    }

    Scalar central(const BasisSymbol&) const { return Scalar::zero(); }
};

} // namespace detail

/// Element of the generalized Verma module Ind T_{mu'}(a,b,F): PBW monomials
/// in generators of negative first coordinate, tensored with T basis vectors.
using GenVermaVector = detail::ModVector<detail::GenVermaPolicy>;

namespace detail {

// Exact equality as module elements: the difference must vanish coefficientwise,
// which tolerates explicit zero entries left over from cancellation.
inline bool gv_equal(GenVermaVector a, const GenVermaVector& b) {
    for (auto& [k, c] : b) {
        auto [it, fresh] = a.emplace(k, -c);
        if (!fresh) it->second -= c;
    }
    for (auto& [k, c] : a)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace detail

inline GenVermaVector genverma_act(const Context& ctx, const TModuleSpec& tspec,
                                   const AlgebraElement& x, const GenVermaVector& v) {
    if (ctx.n() < 2) throw DimensionTooSmall();
    if (tspec.n != ctx.n() - 1) throw DimensionMismatch("T-module must have dimension n-1");
    detail::GenVermaPolicy pol{tspec};
    return detail::act_element(ctx, pol, x, v);
}

/// Z-grading level of a basis key: minus the sum of first coordinates of the
/// PBW factors (level 0 is the T-module itself).
inline std::int64_t genverma_level(const PBWMonomial& m) {
    std::int64_t s = 0;
    for (auto& f : m.f) s += f.alpha.c.front();
    return -s;
}

/// Windowed basis of the level-i subspace with a fixed total weight offset:
/// PBW monomials whose first coordinates sum to -i, all factor coordinates
/// bounded by B, tensored with v_{kappa'} so that the full offset (factor sum,
/// kappa' added in the last n-1 slots) equals `offset`.
inline std::vector<std::pair<PBWMonomial, LatticeVector>> genverma_level_basis(
    const Context& ctx, int level, int B, const LatticeVector& offset) {
    if (ctx.n() < 2) throw DimensionTooSmall();
    if (offset.dim() != ctx.n()) throw DimensionMismatch();
    if (offset.c.front() != -level) return {};
    std::vector<PBWFactor> universe;
    for (auto& a : lattice_window(ctx.n(), B)) {
        if (a.c.front() >= 0) continue;
        universe.push_back(PBWFactor{SymbolKind::E, a});
        universe.push_back(PBWFactor{SymbolKind::H, a});
    }
    std::sort(universe.begin(), universe.end());
    std::vector<std::pair<PBWMonomial, LatticeVector>> out;
    PBWMonomial cur;
    auto rec = [&](auto&& self, std::size_t start, std::int64_t depth,
                   const LatticeVector& sum) -> void {
        if (depth == level && !cur.f.empty()) {
            // kappa' absorbs the remaining offset in the last n-1 coordinates
            LatticeVector kappa = LatticeVector::zero(ctx.n() - 1);
            bool ok = true;
            for (int i = 1; i < ctx.n(); ++i) {
                kappa.c[static_cast<std::size_t>(i - 1)] =
                    offset.c[static_cast<std::size_t>(i)] - sum.c[static_cast<std::size_t>(i)];
            }
            if (ok) out.emplace_back(cur, kappa);
        }
        if (depth >= level) return;
        for (std::size_t i = start; i < universe.size(); ++i) {
            if (depth - universe[i].alpha.c.front() > level) continue;
            cur.f.push_back(universe[i]);
            self(self, i, depth - universe[i].alpha.c.front(), sum + universe[i].alpha);
            cur.f.pop_back();
        }
    };
    rec(rec, 0, 0, LatticeVector::zero(ctx.n()));
    std::sort(out.begin(), out.end());
    return out;
}

struct GenVermaReport {
    bool embedding_ok = true;   // level-0 action agrees with repmod under the embedding
    bool grading_ok = true;     // degree-j generators map level i to level i-j
    bool axioms_ok = true;      // sampled bracket compatibility on level-i basis
    std::size_t level_basis_count = 0; // per kappa'-offset, within window B
    std::string failure;
};

namespace detail {

/// Rename indeterminates between the big n-context and a small (n-1)-context:
/// m_i of the small context corresponds to m_{i+1} of the big one, parameters
/// match by name. Scalars carry bare ids, so renaming is a substitution.
inline std::map<int, Scalar> context_renaming(const Context& from, const Context& to, int shift) {
    std::map<int, Scalar> sub;
    for (int i = 0; i < from.size(); ++i) {
        const std::string& name = from.name_of(i);
        std::string target = name;
        if (i < from.n()) target = "m" + std::to_string(i + 1 + shift);
        if (!to.has(target)) continue; // e.g. m1 of the big context has no image
        sub.emplace(i, Scalar::variable(to.id_of(target)));
    }
    return sub;
}

} // namespace detail

/// Desk-scale verification of the generalized Verma construction at one level.
inline GenVermaReport genverma_level_check(const Context& ctx, const TModuleSpec& tspec,
                                           int level, int B) {
    if (ctx.n() < 2) throw DimensionTooSmall();
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    if (tspec.n != ctx.n() - 1) throw DimensionMismatch("T-module must have dimension n-1");
    GenVermaReport report;
    const int n = ctx.n();

    // (c) level 0: wall action equals the repmod action computed in an
    // independent (n-1)-context, with m_i of that context read as m_{i+1}.
    {
        Context small(n - 1, default_params());
        auto down = detail::context_renaming(ctx, small, -1); // big -> small (m1 of ctx unused here)
        auto up = detail::context_renaming(small, ctx, +1);   // small -> big
        TModuleSpec small_spec{n - 1, tspec.a.substitute(down), tspec.b.substitute(down),
                               tspec.F.substitute(down), false};
        for (auto& ar : lattice_window(n - 1, B))
            for (auto& kr : lattice_window(n - 1, B))
                for (auto kind : {SymbolKind::E, SymbolKind::H}) {
                    // embedded generator acting on the plain tensor 1 (x) v_{kr}
                    LatticeVector big_alpha = LatticeVector::zero(n);
                    for (int i = 1; i < n; ++i)
                        big_alpha.c[static_cast<std::size_t>(i)] = ar.c[static_cast<std::size_t>(i - 1)];
                    GenVermaVector v{{{PBWMonomial{}, kr}, Scalar::one()}};
                    GenVermaVector got = genverma_act(
                        ctx, tspec, AlgebraElement{{BasisSymbol{kind, big_alpha}, Scalar::one()}}, v);
                    TVector expect = t_act_basis(small, small_spec, BasisSymbol{kind, ar}, kr);
                    GenVermaVector lifted;
                    for (auto& [k2, c] : expect)
                        lifted.emplace(std::make_pair(PBWMonomial{}, k2), c.substitute(up));
                    if (!detail::gv_equal(got, lifted)) {
                        report.embedding_ok = false;
                        report.failure = "embedding mismatch at level 0";
                        return report;
                    }
                }
    }

    // level-i windowed basis for a fixed kappa'-offset
    LatticeVector offset = LatticeVector::zero(n);
    offset.c.front() = -level;
    auto basis = genverma_level_basis(ctx, level, B, offset);
    report.level_basis_count = basis.size();

    // (a) grading law and (b) module axiom on windowed generator pairs
    std::vector<BasisSymbol> gens;
    for (auto& a : lattice_window(n, 1)) {
        gens.push_back(BasisSymbol::e(a));
        gens.push_back(BasisSymbol::h(a));
    }
    for (auto& [mono, kappa] : basis) {
        GenVermaVector w{{{mono, kappa}, Scalar::one()}};
        for (auto& g : gens) {
            std::int64_t j = g.alpha.c.front();
            GenVermaVector img = genverma_act(ctx, tspec, AlgebraElement{{g, Scalar::one()}}, w);
            for (auto& [key, c] : img)
                if (genverma_level(key.first) != level - j) {
                    report.grading_ok = false;
                    report.failure = "grading violation";
                    return report;
                }
        }
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j2 = i + 1; j2 < gens.size(); ++j2) {
                AlgebraElement ex{{gens[i], Scalar::one()}}, ey{{gens[j2], Scalar::one()}};
                GenVermaVector lhs =
                    genverma_act(ctx, tspec, bracket(ctx, AlgebraVariant::HVir, ex, ey), w);
                GenVermaVector rhs = genverma_act(ctx, tspec, ex, genverma_act(ctx, tspec, ey, w));
                GenVermaVector rhs2 = genverma_act(ctx, tspec, ey, genverma_act(ctx, tspec, ex, w));
                for (auto& [key, c] : rhs2) {
                    auto [it, fresh] = rhs.emplace(key, -c);
                    if (!fresh) it->second -= c;
                }
                if (!detail::gv_equal(lhs, rhs)) {
                    report.axioms_ok = false;
                    report.failure = "module axiom defect";
                    return report;
                }
            }
    }
    return report;
}

} // namespace shv
