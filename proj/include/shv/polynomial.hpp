#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shv/errors.hpp"
#include "shv/rational.hpp"

namespace shv {

/// Sparse power product over indeterminate ids. Zero exponents are never
/// stored; the empty product is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return {}; }

    static Monomial var(int id, int exp = 1) {
        Monomial m;
        if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
        if (exp > 0) m.e_.emplace_back(id, exp);
        return m;
    }

    bool is_one() const { return e_.empty(); }

    int total_degree() const {
        int d = 0;
        for (auto& [id, e] : e_) d += e;
        return d;
    }

    int exponent(int id) const {
        for (auto& [i, e] : e_)
            if (i == id) return e;
        return 0;
    }

    const std::vector<std::pair<int, int>>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < e_.size() || j < o.e_.size()) {
            if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
                r.e_.push_back(e_[i++]);
            } else if (i == e_.size() || o.e_[j].first < e_[i].first) {
                r.e_.push_back(o.e_[j++]);
            } else {
                r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        std::size_t i = 0;
        for (auto& [id, e] : o.e_) {
            while (i < e_.size() && e_[i].first < id) ++i;
            if (i == e_.size() || e_[i].first != id || e_[i].second < e) return false;
        }
        return true;
    }

    /// Exact division; caller guarantees divisibility (used for content
    /// cancellation only).
    Monomial divide_by(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < e_.size()) {
            if (j < o.e_.size() && o.e_[j].first == e_[i].first) {
                int d = e_[i].second - o.e_[j].second;
                if (d < 0) throw std::invalid_argument("monomial not divisible");
                if (d > 0) r.e_.emplace_back(e_[i].first, d);
                ++i;
                ++j;
            } else {
                r.e_.push_back(e_[i++]);
            }
        }
        if (j != o.e_.size()) throw std::invalid_argument("monomial not divisible");
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.e_.size() && j < b.e_.size()) {
            if (a.e_[i].first < b.e_[j].first) ++i;
            else if (b.e_[j].first < a.e_[i].first) ++j;
            else {
                r.e_.emplace_back(a.e_[i].first, std::min(a.e_[i].second, b.e_[j].second));
                ++i;
                ++j;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    std::vector<std::pair<int, int>> e_; // (id, exp>0), ids strictly increasing
};

/// Graded-lex order: total degree first, then lex with lower ids more
/// significant (m1 > m2 > ...).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        std::size_t i = 0, j = 0;
        while (i < ea.size() && j < eb.size()) {
            if (ea[i].first != eb[j].first) {
                // the one holding the smaller id has the lex-greater monomial
                return ea[i].first > eb[j].first;
            }
            if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
            ++i;
            ++j;
        }
        return i == ea.size() && j < eb.size() ? false
             : j == eb.size() && i < ea.size() ? true
             : false;
    }
};

/// Sparse multivariate polynomial over the rationals; terms kept in graded-lex
/// ascending order, no zero coefficients stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;

    static Polynomial constant(Rational q) {
        Polynomial p;
        if (q != 0) p.t_.emplace(Monomial::one(), std::move(q));
        return p;
    }

    static Polynomial one() { return constant(1); }

    static Polynomial variable(int id) {
        Polynomial p;
        p.t_.emplace(Monomial::var(id), Rational(1));
        return p;
    }

    static Polynomial term(Monomial m, Rational q) {
        Polynomial p;
        if (q != 0) p.t_.emplace(std::move(m), std::move(q));
        return p;
    }

    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
    }

    /// Constant term (the whole value when is_constant()).
    Rational constant_value() const {
        auto it = t_.find(Monomial::one());
        return it == t_.end() ? Rational(0) : it->second;
    }

    const TermMap& terms() const { return t_; }

    std::size_t term_count() const { return t_.size(); }

    int total_degree() const {
        return t_.empty() ? 0 : t_.rbegin()->first.total_degree();
    }

    /// Leading coefficient under graded-lex.
    Rational leading_coefficient() const {
        return t_.empty() ? Rational(0) : t_.rbegin()->second;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const Rational& q) {
        if (q == 0) { t_.clear(); return *this; }
        for (auto& [m, c] : t_) c *= q;
        return *this;
    }

    friend Polynomial operator*(Polynomial p, const Rational& q) { return p *= q; }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power of polynomial");
        Polynomial r = one(), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    /// Content = gcd(numerators) / lcm(denominators); 0 for the zero polynomial.
    Rational content() const {
        Integer num_gcd = 0, den_lcm = 1;
        for (auto& [m, c] : t_) {
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
        if (num_gcd == 0) return 0;
        return Rational(num_gcd, den_lcm);
    }

    /// Quotient if the division is exact, nullopt otherwise; single-divisor
    /// division w.r.t. the grlex order, exact iff no term falls into the
    /// remainder.
    std::optional<Polynomial> try_divide(const Polynomial& d) const {
        if (d.is_zero()) return std::nullopt;
        Polynomial r = *this, q;
        const Monomial& dm = d.t_.rbegin()->first;
        const Rational& dc = d.t_.rbegin()->second;
        while (!r.t_.empty()) {
            auto rl = r.t_.rbegin();
            if (!rl->first.divisible_by(dm)) return std::nullopt;
            Monomial m = rl->first.divide_by(dm);
            Rational c = rl->second / dc;
            q.add_term(m, c);
            for (auto& [mm, cc] : d.t_) r.add_term(mm * m, -cc * c);
        }
        return q;
    }

    /// gcd of the power products of all terms.
    Monomial monomial_content() const {
        if (t_.empty()) return Monomial::one();
        auto it = t_.begin();
        Monomial g = it->first;
        for (++it; it != t_.end() && !g.is_one(); ++it) g = Monomial::gcd(g, it->first);
        return g;
    }

    Polynomial divide_monomial(const Monomial& m) const {
        Polynomial r;
        for (auto& [mm, c] : t_) r.t_.emplace(mm.divide_by(m), c);
        return r;
    }

    Polynomial divide_rational(const Rational& q) const {
        if (q == 0) throw DivisionByZeroScalar();
        Polynomial r;
        for (auto& [m, c] : t_) r.t_.emplace(m, c / q);
        return r;
    }

    /// Evaluation at a full rational point; throws MissingAssignment (with the
    /// id spelled numerically) on an uncovered indeterminate.
    Rational evaluate(const std::map<int, Rational>& at) const {
        Rational out = 0;
        for (auto& [m, c] : t_) {
            Rational v = c;
            for (auto& [id, e] : m.exponents()) {
                auto it = at.find(id);
                if (it == at.end()) throw MissingAssignment("indeterminate #" + std::to_string(id));
                Rational p = 1;
                for (int k = 0; k < e; ++k) p *= it->second;
                v *= p;
            }
            out += v;
        }
        return out;
    }

    /// Set of indeterminate ids occurring in the polynomial.
    std::vector<int> indeterminates() const {
        std::vector<int> ids;
        for (auto& [m, c] : t_)
            for (auto& [id, e] : m.exponents())
                if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    TermMap t_;
};

} // namespace shv
