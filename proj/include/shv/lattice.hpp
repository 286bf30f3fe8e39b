#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "shv/context.hpp"
#include "shv/scalar.hpp"

namespace shv {

/// Index vector in Z^n; names elements of Gamma_mu (sigma_mu is injective for
/// generic mu, so no scalar comparison is ever needed for indexing).
struct LatticeVector {
    std::vector<std::int64_t> c;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<std::int64_t> v) : c(std::move(v)) {}

    static LatticeVector zero(int n) { return LatticeVector(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

    int dim() const { return static_cast<int>(c.size()); }

    bool is_zero() const {
        for (auto v : c)
            if (v != 0) return false;
        return true;
    }

    LatticeVector operator+(const LatticeVector& o) const {
        check_dim(o);
        LatticeVector r = *this;
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
        return r;
    }

    LatticeVector operator-() const {
        LatticeVector r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    LatticeVector operator-(const LatticeVector& o) const { return *this + (-o); }

    auto operator<=>(const LatticeVector&) const = default;

    void check_dim(const LatticeVector& o) const {
        if (c.size() != o.c.size()) throw DimensionMismatch();
    }
};

enum class Ordering { LT, EQ, GT };

/// Lexicographic comparison; the first coordinate is the most significant, so
/// it coincides with componentwise std::vector ordering.
inline Ordering lex_cmp(const LatticeVector& a, const LatticeVector& b) {
    a.check_dim(b);
    if (a.c < b.c) return Ordering::LT;
    if (b.c < a.c) return Ordering::GT;
    return Ordering::EQ;
}

enum class SignClass { Negative, Zero, Positive };

inline SignClass sign_class(const LatticeVector& a) {
    if (a.is_zero()) return SignClass::Zero;
    LatticeVector z = LatticeVector::zero(a.dim());
    return lex_cmp(a, z) == Ordering::LT ? SignClass::Negative : SignClass::Positive;
}

/// sigma_mu: alpha -> mu . alpha as a Scalar. Symbolic by default; when the
/// context carries a rational specialization of mu the value is evaluated, and
/// a vanishing value for alpha != 0 aborts the run (the specialization is not
/// generic at this window).
inline Scalar mu_form(const Context& ctx, const LatticeVector& alpha) {
    if (alpha.dim() != ctx.n()) throw DimensionMismatch();
    if (ctx.mu_values) {
        Rational v = 0;
        for (int i = 0; i < ctx.n(); ++i)
            v += (*ctx.mu_values)[static_cast<std::size_t>(i)] * alpha.c[static_cast<std::size_t>(i)];
        if (v == 0 && !alpha.is_zero()) {
            std::string s = "[";
            for (int i = 0; i < alpha.dim(); ++i)
                s += (i ? "," : "") + std::to_string(alpha.c[static_cast<std::size_t>(i)]);
            throw NonGenericSpecialization("mu . " + s + "] = 0");
        }
        return Scalar(v);
    }
    Polynomial p;
    for (int i = 0; i < ctx.n(); ++i)
        if (alpha.c[static_cast<std::size_t>(i)] != 0)
            p += Polynomial::term(Monomial::var(i), Rational(alpha.c[static_cast<std::size_t>(i)]));
    return Scalar(std::move(p));
}

/// All lattice vectors of the given dimension with |coord| <= B, in lex
/// ascending order.
inline std::vector<LatticeVector> lattice_window(int n, int B) {
    std::vector<LatticeVector> out;
    LatticeVector cur = LatticeVector::zero(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = -B; v <= B; ++v) {
            cur.c[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace shv
