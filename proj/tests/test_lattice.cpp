#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "shv/lattice.hpp"
#include "shv/scalar_io.hpp"

using namespace shv;

namespace {
LatticeVector L(std::vector<std::int64_t> c) { return LatticeVector{std::move(c)}; }
} // namespace

TEST_CASE("group laws on random vectors") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int t = 0; t < 200; ++t) {
        LatticeVector a = L({d(rng), d(rng), d(rng)});
        LatticeVector b = L({d(rng), d(rng), d(rng)});
        LatticeVector c = L({d(rng), d(rng), d(rng)});
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + LatticeVector::zero(3) == a);
        CHECK(a - a == LatticeVector::zero(3));
        CHECK(-(-a) == a);
    }
}

TEST_CASE("lex order: first coordinate is most significant") {
    CHECK(lex_cmp(L({0, 5}), L({1, -100})) == Ordering::LT);
    CHECK(lex_cmp(L({1, -1}), L({1, 0})) == Ordering::LT);
    CHECK(lex_cmp(L({2, 3}), L({2, 3})) == Ordering::EQ);
    CHECK(sign_class(L({0, 0, 0})) == SignClass::Zero);
    CHECK(sign_class(L({0, 0, -1})) == SignClass::Negative);
    CHECK(sign_class(L({0, 1, -100})) == SignClass::Positive);
    // total: exactly one of <, =, > holds
    std::mt19937 rng(12);
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    for (int t = 0; t < 100; ++t) {
        LatticeVector a = L({d(rng), d(rng)}), b = L({d(rng), d(rng)});
        int rel = (lex_cmp(a, b) == Ordering::LT) + (lex_cmp(a, b) == Ordering::EQ) +
                  (lex_cmp(a, b) == Ordering::GT);
        CHECK(rel == 1);
        if (lex_cmp(a, b) == Ordering::LT) CHECK(lex_cmp(b, a) == Ordering::GT);
    }
}

TEST_CASE("mu_form is additive and injective on the symbolic side") {
    Context ctx(3, default_params());
    std::mt19937 rng(13);
    std::uniform_int_distribution<std::int64_t> d(-5, 5);
    for (int t = 0; t < 100; ++t) {
        LatticeVector a = L({d(rng), d(rng), d(rng)});
        LatticeVector b = L({d(rng), d(rng), d(rng)});
        CHECK(mu_form(ctx, a + b) == mu_form(ctx, a) + mu_form(ctx, b));
        // sigma_mu is injective for symbolic mu: equal values force equal vectors
        if (!(a == b)) CHECK_FALSE(mu_form(ctx, a) == mu_form(ctx, b));
    }
    CHECK(mu_form(ctx, LatticeVector::zero(3)).is_zero());
    CHECK(to_string(mu_form(ctx, L({1, -2, 0})), ctx) == "m1 - 2*m2");
}

TEST_CASE("rational specialization guards genericity") {
    Context ctx(2, default_params());
    ctx.mu_values = std::vector<Rational>{Rational(2), Rational(1)};
    CHECK(mu_form(ctx, L({1, 1})) == Scalar(3));
    CHECK(mu_form(ctx, L({0, 0})).is_zero());
    CHECK_THROWS_AS(mu_form(ctx, L({1, -2})), NonGenericSpecialization);
    CHECK_THROWS_AS(mu_form(ctx, L({-2, 4})), NonGenericSpecialization);
}

TEST_CASE("window enumeration is the full box, lex ascending, no duplicates") {
    auto w = lattice_window(2, 2);
    CHECK(w.size() == 25);
    std::set<LatticeVector> seen(w.begin(), w.end());
    CHECK(seen.size() == w.size());
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(lex_cmp(w[i - 1], w[i]) == Ordering::LT);
    for (auto& v : w)
        for (auto c : v.c) CHECK(std::abs(c) <= 2);
    CHECK(lattice_window(3, 1).size() == 27);
    CHECK(lattice_window(1, 4).size() == 9);
}

TEST_CASE("dimension checks") {
    Context ctx(2, default_params());
    CHECK_THROWS_AS(L({1, 2}) + L({1, 2, 3}), DimensionMismatch);
    CHECK_THROWS_AS(mu_form(ctx, L({1})), DimensionMismatch);
}
