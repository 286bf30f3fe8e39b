#pragma once

#include <compare>
#include <vector>

#include "shv/algebra.hpp"

namespace shv {

/// One factor of a PBW monomial. Factors are kept sorted by (alpha lex
/// ascending, E before H); multiplicities are allowed.
struct PBWFactor {
    SymbolKind kind; // E or H only
    LatticeVector alpha;

    BasisSymbol symbol() const { return {kind, alpha}; }

    friend bool operator<(const PBWFactor& a, const PBWFactor& b) {
        if (a.alpha != b.alpha) return lex_cmp(a.alpha, b.alpha) == Ordering::LT;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    }
    friend bool operator==(const PBWFactor& a, const PBWFactor& b) {
        return a.kind == b.kind && a.alpha == b.alpha;
    }
    friend bool operator<=(const PBWFactor& a, const PBWFactor& b) { return a < b || a == b; }
};

/// Ordered product of creation-side generators applied to the cyclic vector;
/// the empty monomial is the vector itself.
struct PBWMonomial {
    std::vector<PBWFactor> f;

    bool empty() const { return f.empty(); }
    std::size_t degree() const { return f.size(); }

    LatticeVector weight_offset(int n) const {
        LatticeVector g = LatticeVector::zero(n);
        for (auto& x : f) g = g + x.alpha;
        return g;
    }

    PBWMonomial with_prefix(const PBWFactor& x) const {
        PBWMonomial r;
        r.f.reserve(f.size() + 1);
        r.f.push_back(x);
        r.f.insert(r.f.end(), f.begin(), f.end());
        return r;
    }

    PBWMonomial tail() const {
        PBWMonomial r;
        r.f.assign(f.begin() + 1, f.end());
        return r;
    }

    friend auto operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
        if (a.f.size() != b.f.size()) return a.f.size() <=> b.f.size();
        for (std::size_t i = 0; i < a.f.size(); ++i) {
            if (a.f[i] < b.f[i]) return std::strong_ordering::less;
            if (b.f[i] < a.f[i]) return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.f == b.f; }
};

namespace detail {

/// Straightening engine shared by the Verma module and the generalized Verma
/// module. A policy classifies generators relative to the wall, applies the
/// wall action, and scales by the central characters. State carries whatever
/// the cyclic vector is tensored with (nothing for M(lambda), a T-module
/// index for the generalized construction).
enum class Side { Create, Wall, Kill };

template <class Policy>
using ModVector = std::map<std::pair<PBWMonomial, typename Policy::State>, Scalar>;

template <class Policy>
void add_term(ModVector<Policy>& v, const PBWMonomial& m, const typename Policy::State& st,
              const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, st);
    auto [it, fresh] = v.emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

template <class Policy>
ModVector<Policy> act_symbol(const Context& ctx, const Policy& pol, const BasisSymbol& g,
                             const PBWMonomial& m, const typename Policy::State& st) {
    ModVector<Policy> out;
    if (g.central()) {
        add_term<Policy>(out, m, st, pol.central(g));
        return out;
    }
    Side side = pol.classify(g);
    if (m.empty()) {
        if (side == Side::Create) {
            add_term<Policy>(out, PBWMonomial{{PBWFactor{g.kind, g.alpha}}}, st, Scalar::one());
        } else if (side == Side::Wall) {
            for (auto& [st2, c] : pol.wall(ctx, g, st)) add_term<Policy>(out, m, st2, c);
        }
        return out;
    }
    PBWFactor gf{g.kind, g.alpha};
    if (side == Side::Create && gf <= m.f.front()) {
        add_term<Policy>(out, m.with_prefix(gf), st, Scalar::one());
        return out;
    }
    // g (f0 rest) = f0 (g rest) + [g, f0] rest
    const PBWFactor f0 = m.f.front();
    const PBWMonomial rest = m.tail();
    ModVector<Policy> sub = act_symbol(ctx, pol, g, rest, st);
    for (auto& [key, c] : sub) {
        ModVector<Policy> lifted = act_symbol(ctx, pol, f0.symbol(), key.first, key.second);
        for (auto& [key2, c2] : lifted) add_term<Policy>(out, key2.first, key2.second, c * c2);
    }
    AlgebraElement br = bracket_basis(ctx, AlgebraVariant::HVir, g, f0.symbol());
    for (auto& [s, cb] : br) {
        ModVector<Policy> part = act_symbol(ctx, pol, s, rest, st);
        for (auto& [key, c] : part) add_term<Policy>(out, key.first, key.second, cb * c);
    }
    return out;
}

template <class Policy>
ModVector<Policy> act_element(const Context& ctx, const Policy& pol, const AlgebraElement& x,
                              const ModVector<Policy>& v) {
    ModVector<Policy> out;
    for (auto& [s, cx] : x)
        for (auto& [key, cv] : v) {
            ModVector<Policy> part = act_symbol(ctx, pol, s, key.first, key.second);
            for (auto& [key2, c] : part) add_term<Policy>(out, key2.first, key2.second, c * cx * cv);
        }
    return out;
}

} // namespace detail

/// Highest-weight data lambda = (lam, c0, c1, c2, c3): the eigenvalues of
/// e_{mu.0}, h_0 and the three central elements on the cyclic vector.
struct HighestWeight {
    Scalar lam, c0, c1, c2, c3;

    static HighestWeight symbolic(const Context& ctx) {
        return {Scalar::variable(ctx.id_of("lam")), Scalar::variable(ctx.id_of("c0")),
                Scalar::variable(ctx.id_of("c1")), Scalar::variable(ctx.id_of("c2")),
                Scalar::variable(ctx.id_of("c3"))};
    }
};

struct VermaOptions {
    bool lowest = false; // swap Delta+/Delta- (lowest-weight mirror)
};

namespace detail {

struct VermaPolicy {
    using State = std::monostate;
    const HighestWeight& hw;
    bool lowest;

    Side classify(const BasisSymbol& g) const {
        SignClass s = sign_class(g.alpha);
        if (s == SignClass::Zero) return Side::Wall;
        bool creating = lowest ? s == SignClass::Positive : s == SignClass::Negative;
        return creating ? Side::Create : Side::Kill;
    }

    std::vector<std::pair<State, Scalar>> wall(const Context&, const BasisSymbol& g, State) const {
        return {{State{}, g.kind == SymbolKind::E ? hw.lam : hw.c0}};
    }

    Scalar central(const BasisSymbol& g) const {
        switch (g.kind) {
            case SymbolKind::C1: return hw.c1;
            case SymbolKind::C2: return hw.c2;
            default: return hw.c3;
        }
    }
};

} // namespace detail

/// Element of M(lambda): finite Scalar combination of canonical PBW monomials.
using VermaVector = std::map<PBWMonomial, Scalar>;

inline void add_term(VermaVector& v, const PBWMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline VermaVector& operator+=(VermaVector& a, const VermaVector& b) {
    for (auto& [m, c] : b) add_term(a, m, c);
    return a;
}

inline VermaVector scaled(const VermaVector& v, const Scalar& c) {
    VermaVector r;
    if (c.is_zero()) return r;
    for (auto& [m, s] : v) r.emplace(m, s * c);
    return r;
}

/// Straightening action of an algebra element on a Verma vector: commute past
/// PBW factors with the HVir bracket, apply wall relations at the cyclic
/// vector, and return the canonical PBW form.
inline VermaVector verma_act(const Context& ctx, const HighestWeight& hw, const AlgebraElement& x,
                             const VermaVector& v, VermaOptions opt = {}) {
    detail::VermaPolicy pol{hw, opt.lowest};
    detail::ModVector<detail::VermaPolicy> vv;
    for (auto& [m, c] : v) vv.emplace(std::make_pair(m, std::monostate{}), c);
    auto out = detail::act_element(ctx, pol, x, vv);
    VermaVector r;
    for (auto& [key, c] : out) r.emplace(key.first, c);
    return r;
}

inline LatticeVector weight_of(const Context& ctx, const PBWMonomial& m) {
    return m.weight_offset(ctx.n());
}

/// All canonical PBW monomials with at most max_degree factors, every factor
/// index in the creation cone with |coord| <= coord_bound, and index sum
/// gamma. Deterministic (ordered) output.
inline std::vector<PBWMonomial> weight_basis(const Context& ctx, const LatticeVector& gamma,
                                             int max_degree, int coord_bound,
                                             VermaOptions opt = {}) {
    if (gamma.dim() != ctx.n()) throw DimensionMismatch();
    SignClass cone = opt.lowest ? SignClass::Positive : SignClass::Negative;
    std::vector<PBWFactor> universe;
    for (auto& a : lattice_window(ctx.n(), coord_bound)) {
        if (sign_class(a) != cone) continue;
        universe.push_back(PBWFactor{SymbolKind::E, a});
        universe.push_back(PBWFactor{SymbolKind::H, a});
    }
    std::sort(universe.begin(), universe.end());

    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    auto rec = [&](auto&& self, std::size_t start, const LatticeVector& sum) -> void {
        if (sum == gamma) out.push_back(cur);
        if (cur.f.size() == static_cast<std::size_t>(max_degree)) return;
        for (std::size_t i = start; i < universe.size(); ++i) {
            cur.f.push_back(universe[i]);
            self(self, i, sum + universe[i].alpha);
            cur.f.pop_back();
        }
    };
    rec(rec, 0, LatticeVector::zero(ctx.n()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Weight-multiplicity growth in the coordinate bound at fixed degree; for
/// n >= 2 and suitable gamma the counts grow without bound, the desk-scale
/// witness of infinite-dimensional weight spaces.
inline std::vector<std::size_t> weight_growth(const Context& ctx, const LatticeVector& gamma,
                                              int max_degree, int k_min, int k_max,
                                              VermaOptions opt = {}) {
    std::vector<std::size_t> counts;
    for (int k = k_min; k <= k_max; ++k)
        counts.push_back(weight_basis(ctx, gamma, max_degree, k, opt).size());
    return counts;
}

} // namespace shv
