#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shv/element_io.hpp"
#include "shv/module_io.hpp"

using namespace shv;

namespace {
TModuleSpec symbolic_spec(const Context& ctx) {
    return TModuleSpec{ctx.n(), Scalar::variable(ctx.id_of("a")), Scalar::variable(ctx.id_of("b")),
                       Scalar::variable(ctx.id_of("F")), false};
}
} // namespace

TEST_CASE("action on basis vectors") {
    Context ctx(2, default_params());
    TModuleSpec spec = symbolic_spec(ctx);
    LatticeVector k{{0, 1}};
    TVector out = t_act_basis(ctx, spec, BasisSymbol::e(LatticeVector{{1, 0}}), k);
    CHECK(to_string(out, ctx) == "(m1*b + m2 + a)*v[1,1]");
    out = t_act_basis(ctx, spec, BasisSymbol::h(LatticeVector{{1, 0}}), k);
    CHECK(to_string(out, ctx) == "F*v[1,1]");
    // centers act by zero
    for (auto c : {BasisSymbol::c1(), BasisSymbol::c2(), BasisSymbol::c3()})
        CHECK(t_act_basis(ctx, spec, c, k).empty());
}

TEST_CASE("module axioms hold symbolically on the window") {
    for (int n : {1, 2}) {
        Context ctx(n, default_params());
        TModuleSpec spec = symbolic_spec(ctx);
        auto window = lattice_window(n, 2);
        std::vector<BasisSymbol> gens;
        for (auto& a : window) {
            gens.push_back(BasisSymbol::e(a));
            gens.push_back(BasisSymbol::h(a));
        }
        for (auto& x : gens)
            for (auto& y : gens)
                for (auto& k : window)
                    CHECK(t_axiom_defect(ctx, spec, x, y, k).empty());
    }
}

TEST_CASE("quotient mode factors through the projection") {
    Context ctx(1, default_params());
    TModuleSpec spec{1, Scalar::zero(), Scalar::zero(), Scalar::zero(), true};
    spec.validate(ctx);
    // acting never reaches or leaves from kappa = 0
    for (std::int64_t al = -2; al <= 2; ++al)
        for (std::int64_t k = -2; k <= 2; ++k) {
            TVector img = t_act_basis(ctx, spec, BasisSymbol::e(LatticeVector{{al}}),
                                      LatticeVector{{k}});
            if (k == 0) CHECK(img.empty());
            for (auto& [k2, c] : img) CHECK_FALSE(k2.is_zero());
        }
    // axioms still hold in the quotient
    for (std::int64_t m = -1; m <= 1; ++m)
        for (std::int64_t k = -1; k <= 1; ++k)
            CHECK(t_axiom_defect(ctx, spec, BasisSymbol::e(LatticeVector{{m}}),
                                 BasisSymbol::h(LatticeVector{{k}}), LatticeVector{{1}})
                      .empty());
    // the quotient needs a = b = F = 0
    TModuleSpec bad{1, Scalar::one(), Scalar::zero(), Scalar::zero(), true};
    CHECK_THROWS_AS(bad.validate(ctx), std::invalid_argument);
}

TEST_CASE("submodule probe") {
    Context ctx(2, default_params());
    const int B = 1;

    SUBCASE("symbolic parameters: irreducible, no proper invariant subspace") {
        auto rep = t_submodule_window(ctx, symbolic_spec(ctx), B);
        CHECK(rep.subspaces.empty());
    }

    SUBCASE("(a,b,F) = (0,0,0): the line through v_0") {
        TModuleSpec spec{2, Scalar::zero(), Scalar::zero(), Scalar::zero(), false};
        auto rep = t_submodule_window(ctx, spec, B);
        REQUIRE(rep.subspaces.size() == 1);
        REQUIRE(rep.subspaces[0].size() == 1);
        CHECK(rep.subspaces[0][0].is_zero());
    }

    SUBCASE("(a,b,F) = (0,1,0): the complement of v_0 in the window") {
        TModuleSpec spec{2, Scalar::zero(), Scalar::one(), Scalar::zero(), false};
        auto rep = t_submodule_window(ctx, spec, B);
        REQUIRE(rep.subspaces.size() == 1);
        auto window = lattice_window(2, B);
        CHECK(rep.subspaces[0].size() == window.size() - 1);
        for (auto& k : rep.subspaces[0]) CHECK_FALSE(k.is_zero());
    }

    SUBCASE("generic rational parameters: irreducible") {
        TModuleSpec spec{2, Scalar(Rational(1, 3)), Scalar(Rational(2)), Scalar(Rational(5)),
                         false};
        auto rep = t_submodule_window(ctx, spec, B);
        CHECK(rep.subspaces.empty());
    }
}

TEST_CASE("linearity of the action") {
    Context ctx(2, default_params());
    TModuleSpec spec = symbolic_spec(ctx);
    AlgebraElement x = parse_element("2*E[1,0] - m1*H[0,1]", ctx);
    TVector v;
    add_term(v, LatticeVector{{0, 0}}, Scalar(3));
    add_term(v, LatticeVector{{1, -1}}, Scalar::variable(ctx.id_of("lam")));
    TVector lhs = t_act(ctx, spec, x, v);
    TVector rhs;
    for (auto& [s, cx] : x)
        for (auto& [k, cv] : v) {
            TVector part = t_act_basis(ctx, spec, s, k);
            for (auto& [k2, c2] : part) add_term(rhs, k2, c2 * cx * cv);
        }
    CHECK(lhs == rhs);
}
