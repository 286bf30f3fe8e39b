#pragma once

#include <array>
#include <functional>
#include <variant>

#include "shv/algebra.hpp"

namespace shv {

/// Evaluator for an antisymmetric bilinear form on WA(n)_mu basis symbols.
using CocycleEval = std::function<Scalar(const Context&, const BasisSymbol&, const BasisSymbol&)>;

/// Values of the three generating 2-cocycles on a basis pair; defined on all
/// pairs, antisymmetric by construction.
inline Scalar generator_cocycle_value(const Context& ctx, int which,
                                      const BasisSymbol& x, const BasisSymbol& y) {
    if (x.central() || y.central()) return Scalar::zero();
    const LatticeVector& a = x.alpha;
    const LatticeVector& b = y.alpha;
    switch (which) {
        case 1:
            if (x.kind == SymbolKind::E && y.kind == SymbolKind::E && (a + b).is_zero()) {
                Scalar ma = mu_form(ctx, a);
                return (ma.pow(3) - ma) / Scalar(12);
            }
            return Scalar::zero();
        case 2:
            if (x.kind == SymbolKind::E && y.kind == SymbolKind::H && (a + b).is_zero()) {
                Scalar ma = mu_form(ctx, a);
                return ma.pow(2) - ma;
            }
            if (x.kind == SymbolKind::H && y.kind == SymbolKind::E)
                return -generator_cocycle_value(ctx, 2, y, x);
            return Scalar::zero();
        case 3:
            if (x.kind == SymbolKind::H && y.kind == SymbolKind::H && (a + b).is_zero())
                return mu_form(ctx, a) / Scalar(3);
            return Scalar::zero();
        default:
            throw std::invalid_argument("generator cocycle index must be 1, 2 or 3");
    }
}

inline CocycleEval generator_cocycle(int which) {
    if (which < 1 || which > 3) throw std::invalid_argument("generator cocycle index must be 1, 2 or 3");
    return [which](const Context& ctx, const BasisSymbol& x, const BasisSymbol& y) {
        return generator_cocycle_value(ctx, which, x, y);
    };
}

/// Extend an evaluator linearly in the first slot over an element.
inline Scalar cocycle_apply(const Context& ctx, const CocycleEval& C,
                            const AlgebraElement& x, const BasisSymbol& y) {
    Scalar out;
    for (auto& [s, c] : x) out += c * C(ctx, s, y);
    return out;
}

/// Cyclic 2-cocycle defect C([x,y],z) + C([y,z],x) + C([z,x],y) with the WA
/// bracket (no central terms arise inside the arguments).
inline Scalar cocycle_defect(const Context& ctx, const CocycleEval& C,
                             const BasisSymbol& x, const BasisSymbol& y, const BasisSymbol& z) {
    auto wa = AlgebraVariant::WA;
    AlgebraElement ex{{x, Scalar::one()}}, ey{{y, Scalar::one()}}, ez{{z, Scalar::one()}};
    Scalar out = cocycle_apply(ctx, C, bracket(ctx, wa, ex, ey), z);
    out += cocycle_apply(ctx, C, bracket(ctx, wa, ey, ez), x);
    out += cocycle_apply(ctx, C, bracket(ctx, wa, ez, ex), y);
    return out;
}

/// Windowed linear form on WA basis symbols; value 0 outside support.
class Cochain1 {
public:
    explicit Cochain1(int window = 0) : window_(window) {}

    int window() const { return window_; }

    void set(const BasisSymbol& s, const Scalar& v) {
        if (v.is_zero()) values_.erase(s);
        else values_[s] = v;
    }

    Scalar get(const BasisSymbol& s) const {
        auto it = values_.find(s);
        return it == values_.end() ? Scalar::zero() : it->second;
    }

    const std::map<BasisSymbol, Scalar>& values() const { return values_; }

private:
    int window_;
    std::map<BasisSymbol, Scalar> values_;
};

/// Windowed antisymmetric 2-cochain, stored on canonically ordered pairs.
/// Setting both orientations with incompatible values is rejected.
class Cochain2 {
public:
    explicit Cochain2(int window = 0) : window_(window) {}

    int window() const { return window_; }

    void set(const BasisSymbol& x, const BasisSymbol& y, const Scalar& v) {
        if (x == y) {
            if (!v.is_zero()) throw AntisymmetryViolation();
            return;
        }
        bool flip = y < x;
        auto key = flip ? std::make_pair(y, x) : std::make_pair(x, y);
        Scalar stored = flip ? -v : v;
        auto it = values_.find(key);
        if (it != values_.end()) {
            if (!scalar_eq(it->second, stored)) throw AntisymmetryViolation();
            return;
        }
        if (!stored.is_zero()) values_.emplace(key, stored);
    }

    Scalar get(const BasisSymbol& x, const BasisSymbol& y) const {
        if (x == y) return Scalar::zero();
        bool flip = y < x;
        auto key = flip ? std::make_pair(y, x) : std::make_pair(x, y);
        auto it = values_.find(key);
        if (it == values_.end()) return Scalar::zero();
        return flip ? -it->second : it->second;
    }

    CocycleEval as_eval() const {
        return [this](const Context&, const BasisSymbol& x, const BasisSymbol& y) {
            return get(x, y);
        };
    }

    const std::map<std::pair<BasisSymbol, BasisSymbol>, Scalar>& values() const { return values_; }

    /// Tabulate an evaluator on all pairs of windowed WA symbols.
    static Cochain2 tabulate(const Context& ctx, const CocycleEval& C, int window) {
        Cochain2 out(window);
        auto syms = wa_window_symbols(ctx, window);
        for (std::size_t i = 0; i < syms.size(); ++i)
            for (std::size_t j = i + 1; j < syms.size(); ++j)
                out.set(syms[i], syms[j], C(ctx, syms[i], syms[j]));
        return out;
    }

    static std::vector<BasisSymbol> wa_window_symbols(const Context& ctx, int window) {
        std::vector<BasisSymbol> syms;
        for (auto& a : lattice_window(ctx.n(), window)) {
            syms.push_back(BasisSymbol::e(a));
            syms.push_back(BasisSymbol::h(a));
        }
        std::sort(syms.begin(), syms.end());
        return syms;
    }

private:
    int window_;
    std::map<std::pair<BasisSymbol, BasisSymbol>, Scalar> values_;
};

/// Coboundary (delta b)(x,y) = b([x,y]); antisymmetric by antisymmetry of the
/// bracket, 2-cocycle by the Jacobi identity.
inline Cochain2 coboundary(const Context& ctx, const Cochain1& b) {
    auto eval = [&b](const Context& c, const BasisSymbol& x, const BasisSymbol& y) {
        AlgebraElement br = bracket_basis(c, AlgebraVariant::WA, x, y);
        Scalar out;
        for (auto& [s, v] : br) out += v * b.get(s);
        return out;
    };
    return Cochain2::tabulate(ctx, eval, b.window());
}

struct CocycleDecomposition {
    std::array<Scalar, 3> a;
    Cochain1 cob;
};

struct InconsistentCocycle {
    BasisSymbol x, y, z;
    Scalar defect;
};

using DecomposeResult = std::variant<CocycleDecomposition, InconsistentCocycle>;

namespace detail {

/// Sparse exact Gaussian elimination over the Scalar field. Pivot of each row
/// is its smallest variable; free variables are fixed to zero, so the output
/// is deterministic.
class SparseSolver {
public:
    struct Row {
        std::map<int, Scalar> coeff;
        Scalar rhs;
    };

    // returns false on an inconsistent equation (0 = nonzero)
    bool add_equation(Row row) {
        for (;;) {
            while (!row.coeff.empty() && row.coeff.begin()->second.is_zero())
                row.coeff.erase(row.coeff.begin());
            if (row.coeff.empty()) return row.rhs.is_zero();
            int v = row.coeff.begin()->first;
            auto it = pivots_.find(v);
            if (it == pivots_.end()) {
                Scalar lead = row.coeff.begin()->second;
                for (auto& [var, c] : row.coeff) c /= lead;
                row.rhs /= lead;
                row.coeff.erase(row.coeff.begin());
                pivots_.emplace(v, std::move(row));
                return true;
            }
            // eliminate v against the existing pivot row
            Scalar f = row.coeff.begin()->second;
            row.coeff.erase(row.coeff.begin());
            for (auto& [var, c] : it->second.coeff) {
                auto [jt, fresh] = row.coeff.emplace(var, -f * c);
                if (!fresh) jt->second -= f * c;
            }
            row.rhs -= f * it->second.rhs;
        }
    }

    /// Back-substitute with free variables at zero.
    std::map<int, Scalar> solve() const {
        std::map<int, Scalar> sol;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Scalar v = it->second.rhs;
            for (auto& [var, c] : it->second.coeff) {
                auto st = sol.find(var);
                if (st != sol.end()) v -= c * st->second;
            }
            sol[it->first] = v;
        }
        return sol;
    }

private:
    std::map<int, Row> pivots_;
};

} // namespace detail

/// Desk-scale realization of the three-dimensionality of H^2: write a windowed
/// cocycle as a1 C1 + a2 C2 + a3 C3 + delta(b), using only pairs whose WA
/// bracket stays inside the window. The defect is verified first.
inline DecomposeResult decompose_cocycle(const Context& ctx, const Cochain2& C, int window) {
    if (window < 2) throw UnderdeterminedWindow();
    auto syms = Cochain2::wa_window_symbols(ctx, window);
    std::map<BasisSymbol, int> sym_var; // b-variable ids, offset by 3
    for (std::size_t i = 0; i < syms.size(); ++i)
        sym_var.emplace(syms[i], static_cast<int>(i) + 3);

    auto in_window = [&](const AlgebraElement& el) {
        for (auto& [s, c] : el)
            if (!sym_var.count(s)) return false;
        return true;
    };

    // defect check on triples whose pairwise brackets stay in-window
    auto eval = C.as_eval();
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j)
            for (std::size_t k = j + 1; k < syms.size(); ++k) {
                const auto &x = syms[i], &y = syms[j], &z = syms[k];
                auto wa = AlgebraVariant::WA;
                AlgebraElement ex{{x, Scalar::one()}}, ey{{y, Scalar::one()}}, ez{{z, Scalar::one()}};
                AlgebraElement bxy = bracket(ctx, wa, ex, ey);
                AlgebraElement byz = bracket(ctx, wa, ey, ez);
                AlgebraElement bzx = bracket(ctx, wa, ez, ex);
                if (!in_window(bxy) || !in_window(byz) || !in_window(bzx)) continue;
                Scalar d = cocycle_apply(ctx, eval, bxy, z);
                d += cocycle_apply(ctx, eval, byz, x);
                d += cocycle_apply(ctx, eval, bzx, y);
                if (!d.is_zero()) return InconsistentCocycle{x, y, z, d};
            }

    detail::SparseSolver solver;
    for (std::size_t i = 0; i < syms.size(); ++i)
        for (std::size_t j = i + 1; j < syms.size(); ++j) {
            const auto &x = syms[i], &y = syms[j];
            AlgebraElement br = bracket_basis(ctx, AlgebraVariant::WA, x, y);
            if (!in_window(br)) continue;
            detail::SparseSolver::Row row;
            for (int g = 1; g <= 3; ++g) {
                Scalar c = generator_cocycle_value(ctx, g, x, y);
                if (!c.is_zero()) row.coeff[g - 1] = c;
            }
            for (auto& [s, c] : br) {
                auto [it, fresh] = row.coeff.emplace(sym_var.at(s), c);
                if (!fresh) it->second += c;
            }
            row.rhs = C.get(x, y);
            if (!solver.add_equation(std::move(row))) {
                // a cocycle outside the span; report the pair as a witness
                return InconsistentCocycle{x, y, x, Scalar::one()};
            }
        }

    auto sol = solver.solve();
    CocycleDecomposition out{{Scalar::zero(), Scalar::zero(), Scalar::zero()}, Cochain1(window)};
    for (int g = 0; g < 3; ++g) {
        auto it = sol.find(g);
        if (it != sol.end()) out.a[static_cast<std::size_t>(g)] = it->second;
    }
    for (auto& [s, var] : sym_var) {
        auto it = sol.find(var);
        if (it != sol.end() && !it->second.is_zero()) out.cob.set(s, it->second);
    }
    return out;
}

/// LHS - RHS of the proof's functional equations for theta_1/2/3, as a Scalar
/// in the formal indeterminates x and y. theta is a Scalar in x.
inline Scalar theta_defect(const Context& ctx, int which, const Scalar& theta) {
    int xid = ctx.id_of("x"), yid = ctx.id_of("y");
    Scalar X = Scalar::variable(xid), Y = Scalar::variable(yid);
    auto th = [&](const Scalar& arg) { return theta.substitute({{xid, arg}}); };
    switch (which) {
        case 1:
            return Scalar(2) * X * th(X) - Scalar(2) * Y * th(Y) -
                   ((X - Y) * th(X + Y) + (X + Y) * th(X - Y));
        case 2:
            return (Y - X) * th(X + Y) - (Y + X) * (th(Y) - th(X));
        case 3:
            return Y * th(X + Y) - (Y + X) * th(Y);
        default:
            throw std::invalid_argument("functional equation index must be 1, 2 or 3");
    }
}

} // namespace shv
