#pragma once

#include <map>

#include "shv/polynomial.hpp"

namespace shv {

/// Element of the fraction field Q(m1..mn, params). Equality is decided by
/// cross-multiplication; construction only performs cheap canonicalizations
/// (common monomial factor, rational content of the denominator), never a
/// multivariate gcd.
class Scalar {
public:
    Scalar() : num_(), den_(Polynomial::one()) {}

    Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroScalar();
        normalize_light();
    }

    /* implicit */ Scalar(const Rational& q) : num_(Polynomial::constant(q)), den_(Polynomial::one()) {}
    /* implicit */ Scalar(int v) : Scalar(Rational(v)) {}
    /* implicit */ Scalar(Polynomial p) : num_(std::move(p)), den_(Polynomial::one()) {}

    static Scalar variable(int id) { return Scalar(Polynomial::variable(id)); }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// True when the value is a plain rational (both parts constant).
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    Rational rational_value() const {
        if (!is_rational()) throw std::logic_error("scalar is not a plain rational");
        return num_.constant_value() / den_.constant_value();
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZeroScalar();
        if (a.is_zero()) return Scalar();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw DivisionByZeroScalar();
            return Scalar(den_.pow(-e), num_.pow(-e));
        }
        return Scalar(num_.pow(e), den_.pow(e));
    }

    /// Field equality via cross-multiplication, independent of reduction state.
    friend bool scalar_eq(const Scalar& a, const Scalar& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    bool operator==(const Scalar& o) const { return scalar_eq(*this, o); }

    /// Exact evaluation at a rational point covering all occurring
    /// indeterminates; a vanishing denominator signals a non-generic point.
    Rational evaluate(const std::map<int, Rational>& at) const {
        Rational d = den_.evaluate(at);
        if (d == 0) throw DenominatorVanishes();
        return num_.evaluate(at) / d;
    }

    /// Substitute Scalars for the listed indeterminates (others stay put).
    Scalar substitute(const std::map<int, Scalar>& sub) const {
        return substitute_poly(num_, sub) / substitute_poly(den_, sub);
    }

private:
    static Scalar substitute_poly(const Polynomial& p, const std::map<int, Scalar>& sub) {
        Scalar out;
        for (auto& [m, c] : p.terms()) {
            Scalar term{Rational(c)};
            for (auto& [id, e] : m.exponents()) {
                auto it = sub.find(id);
                Scalar base = it == sub.end() ? Scalar::variable(id) : it->second;
                term *= base.pow(e);
            }
            out += term;
        }
        return out;
    }

    void normalize_light() {
        if (num_.is_zero()) {
            den_ = Polynomial::one();
            return;
        }
        Monomial g = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
        if (!g.is_one()) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
        // scale so both parts have integer coefficients with coprime contents
        // and the denominator a positive leading coefficient
        Rational cn = num_.content(), cd = den_.content();
        Integer l = boost::multiprecision::lcm(denominator(cn), denominator(cd));
        if (l != 1) {
            num_ *= Rational(l);
            den_ *= Rational(l);
            cn *= l;
            cd *= l;
        }
        Integer cg = boost::multiprecision::gcd(numerator(cn), numerator(cd));
        if (cg > 1) {
            num_ = num_.divide_rational(Rational(cg));
            den_ = den_.divide_rational(Rational(cg));
        }
        if (den_.leading_coefficient() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_.is_constant() && den_.constant_value() == 1) return;
        if (num_ == den_) {
            num_ = Polynomial::one();
            den_ = Polynomial::one();
            return;
        }
        // cancel the denominator when the division is exact (no gcd machinery,
        // just a divisibility probe)
        if (auto q = num_.try_divide(den_)) {
            num_ = std::move(*q);
            den_ = Polynomial::one();
            Rational c = num_.content();
            if (denominator(c) != 1) {
                num_ *= Rational(denominator(c));
                den_ *= Rational(denominator(c));
            }
        }
    }

    Polynomial num_, den_;
};

} // namespace shv
