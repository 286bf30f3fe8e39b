// Acceptance checks: one line per criterion, nonzero exit if any fails.
// Everything symbolic is compared exactly; there are no tolerances anywhere.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shv/cocycles.hpp"
#include "shv/element_io.hpp"
#include "shv/module_io.hpp"

using namespace shv;

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SHV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r;
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<BasisSymbol> window_symbols(int n, int B, bool centers) {
    std::vector<BasisSymbol> syms;
    for (auto& a : lattice_window(n, B)) {
        syms.push_back(BasisSymbol::e(a));
        syms.push_back(BasisSymbol::h(a));
    }
    if (centers) {
        syms.push_back(BasisSymbol::c1());
        syms.push_back(BasisSymbol::c2());
        syms.push_back(BasisSymbol::c3());
    }
    return syms;
}

// 1. antisymmetry + Jacobi for all basis triples with |alpha_i| <= 2,
//    n in {1,2,3}, mu symbolic
bool criterion_lie() {
    for (int n = 1; n <= 3; ++n) {
        Context ctx(n, default_params());
        auto syms = window_symbols(n, 2, true);
        const std::size_t N = syms.size();
        // precompute the pair bracket table once; the triple loop then only
        // combines table entries
        std::vector<AlgebraElement> table(N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                table[i * N + j] = bracket_basis(ctx, AlgebraVariant::HVir, syms[i], syms[j]);
        std::map<BasisSymbol, std::size_t> index;
        for (std::size_t i = 0; i < N; ++i) index.emplace(syms[i], i);

        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                AlgebraElement anti = table[i * N + j];
                anti += table[j * N + i];
                if (!anti.empty()) return false;
            }

        // Indices of bracket results can leave the window, so the nested
        // bracket is memoized on (result symbol, third index) instead of
        // looked up in the pair table. Every coefficient met here has a
        // constant denominator dividing 12, which lets the cyclic sum
        // accumulate plain polynomial numerators over the common denominator
        // 12 instead of going through field normalization each time.
        std::map<std::pair<BasisSymbol, std::size_t>, AlgebraElement> memo;
        std::map<BasisSymbol, Polynomial> defect;
        auto full = [&](std::size_t x, std::size_t y, std::size_t z) {
            for (auto& [s, c] : table[x * N + y]) {
                if (s.central()) continue; // centers bracket to zero
                auto key = std::make_pair(s, z);
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, bracket_basis(ctx, AlgebraVariant::HVir, s, syms[z]))
                             .first;
                for (auto& [s2, c2] : it->second) {
                    if (!c.den().is_constant() || !c2.den().is_constant()) return false;
                    Rational scale = Rational(12) / (c.den().constant_value() *
                                                     c2.den().constant_value());
                    Polynomial p = c.num() * c2.num();
                    p *= scale;
                    defect[s2] += p;
                }
            }
            return true;
        };
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                for (std::size_t k = j + 1; k < N; ++k) {
                    defect.clear();
                    if (!full(i, j, k) || !full(j, k, i) || !full(k, i, j)) return false;
                    for (auto& [s, p] : defect)
                        if (!p.is_zero()) return false;
                }
    }
    return true;
}

// 2. generator cocycle defects vanish on all windowed triples, B = 3, n = 2
bool criterion_cocycle_defects() {
    Context ctx(2, default_params());
    auto syms = Cochain2::wa_window_symbols(ctx, 3);
    const std::size_t N = syms.size();
    auto wa = AlgebraVariant::WA;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            AlgebraElement bij = bracket_basis(ctx, wa, syms[i], syms[j]);
            for (std::size_t k = j + 1; k < N; ++k) {
                AlgebraElement bjk = bracket_basis(ctx, wa, syms[j], syms[k]);
                AlgebraElement bki = bracket_basis(ctx, wa, syms[k], syms[i]);
                for (int which = 1; which <= 3; ++which) {
                    auto C = [&](const BasisSymbol& x, const BasisSymbol& y) {
                        return generator_cocycle_value(ctx, which, x, y);
                    };
                    Scalar d;
                    for (auto& [s, c] : bij) d += c * C(s, syms[k]);
                    for (auto& [s, c] : bjk) d += c * C(s, syms[i]);
                    for (auto& [s, c] : bki) d += c * C(s, syms[j]);
                    if (!d.is_zero()) return false;
                }
            }
        }
    return true;
}

// 3. decomposition round trip: 20 seeded random (a, b), plus the pure
//    coboundary C(e_a, e_-a) = mu.a which must come back with a = (0,0,0)
bool criterion_decompose() {
    Context ctx(2, default_params());
    const int B = 2;
    auto syms = Cochain2::wa_window_symbols(ctx, B);
    auto build = [&](const std::array<Scalar, 3>& a, const Cochain1& b) {
        Cochain2 db = coboundary(ctx, b);
        return Cochain2::tabulate(
            ctx,
            [&](const Context& c, const BasisSymbol& x, const BasisSymbol& y) {
                Scalar v;
                for (int g = 1; g <= 3; ++g)
                    v += a[static_cast<std::size_t>(g - 1)] * generator_cocycle_value(c, g, x, y);
                return v + db.get(x, y);
            },
            B);
    };
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::array<Scalar, 3> a{Scalar(Rational(num(rng), den(rng))),
                                Scalar(Rational(num(rng), den(rng))),
                                Scalar(Rational(num(rng), den(rng)))};
        Cochain1 b(B);
        for (auto& s : syms) b.set(s, Scalar(Rational(num(rng), den(rng))));
        Cochain2 built = build(a, b);
        auto res = decompose_cocycle(ctx, built, B);
        auto* dec = std::get_if<CocycleDecomposition>(&res);
        if (!dec) return false;
        for (int g = 0; g < 3; ++g)
            if (!(dec->a[static_cast<std::size_t>(g)] == a[static_cast<std::size_t>(g)]))
                return false;
        Cochain2 again = build(dec->a, dec->cob);
        for (auto& x : syms)
            for (auto& y : syms)
                if (!(again.get(x, y) == built.get(x, y))) return false;
    }
    Cochain2 pure(B);
    for (auto& al : lattice_window(2, B))
        if (!al.is_zero()) pure.set(BasisSymbol::e(al), BasisSymbol::e(-al), mu_form(ctx, al));
    auto res = decompose_cocycle(ctx, pure, B);
    auto* dec = std::get_if<CocycleDecomposition>(&res);
    return dec && dec->a[0].is_zero() && dec->a[1].is_zero() && dec->a[2].is_zero();
}

// 4. functional-equation oracles, with a negative control
bool criterion_theta() {
    Context ctx(1, default_params());
    return theta_defect(ctx, 1, parse_scalar("x^3 - x", ctx)).is_zero() &&
           theta_defect(ctx, 2, parse_scalar("x^2 - x", ctx)).is_zero() &&
           theta_defect(ctx, 3, parse_scalar("x/3", ctx)).is_zero() &&
           !theta_defect(ctx, 1, parse_scalar("x^2", ctx)).is_zero();
}

// 5. intermediate-series module axioms (fully symbolic a, b, F) and the
//    reducibility probes
bool criterion_repmod() {
    for (int n = 1; n <= 2; ++n) {
        Context ctx(n, default_params());
        TModuleSpec spec{n, Scalar::variable(ctx.id_of("a")), Scalar::variable(ctx.id_of("b")),
                         Scalar::variable(ctx.id_of("F")), false};
        auto window = lattice_window(n, 2);
        auto gens = window_symbols(n, 2, false);
        for (auto& x : gens)
            for (auto& y : gens)
                for (auto& k : window)
                    if (!t_axiom_defect(ctx, spec, x, y, k).empty()) return false;
    }
    Context ctx(2, default_params());
    TModuleSpec sym{2, Scalar::variable(ctx.id_of("a")), Scalar::variable(ctx.id_of("b")),
                    Scalar::variable(ctx.id_of("F")), false};
    if (!t_submodule_window(ctx, sym, 1).subspaces.empty()) return false;
    TModuleSpec z{2, Scalar::zero(), Scalar::zero(), Scalar::zero(), false};
    auto r0 = t_submodule_window(ctx, z, 1);
    if (r0.subspaces.size() != 1 || r0.subspaces[0].size() != 1 || !r0.subspaces[0][0].is_zero())
        return false;
    TModuleSpec b1{2, Scalar::zero(), Scalar::one(), Scalar::zero(), false};
    auto r1 = t_submodule_window(ctx, b1, 1);
    return r1.subspaces.size() == 1 && r1.subspaces[0].size() == lattice_window(2, 1).size() - 1;
}

// 6. Verma representation property and weight covariance
bool criterion_verma() {
    Context ctx(2, default_params());
    HighestWeight hw = HighestWeight::symbolic(ctx);
    std::vector<AlgebraElement> gens;
    for (auto& s : window_symbols(2, 1, true)) gens.push_back({{s, Scalar::one()}});
    std::vector<PBWMonomial> monos = weight_basis(ctx, LatticeVector{{-1, 0}}, 2, 1);
    {
        auto more = weight_basis(ctx, LatticeVector{{-1, -1}}, 2, 1);
        monos.insert(monos.end(), more.begin(), more.end());
        monos.push_back(PBWMonomial{});
    }
    for (auto& m : monos) {
        VermaVector v{{m, Scalar::one()}};
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                VermaVector lhs =
                    verma_act(ctx, hw, bracket(ctx, AlgebraVariant::HVir, gens[i], gens[j]), v);
                VermaVector rhs = verma_act(ctx, hw, gens[i], verma_act(ctx, hw, gens[j], v));
                rhs += scaled(verma_act(ctx, hw, gens[j], verma_act(ctx, hw, gens[i], v)),
                              Scalar(-1));
                if (!(lhs == rhs)) return false;
            }
        // weight covariance: E(0) acts on the weight mu-line by lam + mu.gamma
        VermaVector e0 = verma_act(ctx, hw, parse_element("E[0,0]", ctx), v);
        Scalar expect = hw.lam + mu_form(ctx, weight_of(ctx, m));
        if (!(e0 == scaled(v, expect))) return false;
    }
    return true;
}

// 7. weight-multiplicity growth: exact counts, independent enumeration
//    oracle, strictly increasing up to K = 10
bool criterion_growth() {
    Context ctx(2, default_params());
    LatticeVector gamma{{-1, 0}};
    auto oracle = [&](int D, int K) {
        std::vector<PBWFactor> universe;
        for (auto& a : lattice_window(2, K)) {
            if (sign_class(a) != SignClass::Negative) continue;
            universe.push_back(PBWFactor{SymbolKind::E, a});
            universe.push_back(PBWFactor{SymbolKind::H, a});
        }
        std::sort(universe.begin(), universe.end());
        std::size_t count = 0;
        auto rec = [&](auto&& self, std::size_t start, int depth, LatticeVector sum) -> void {
            if (sum == gamma) ++count;
            if (depth == D) return;
            for (std::size_t i = start; i < universe.size(); ++i)
                self(self, i, depth + 1, sum + universe[i].alpha);
        };
        rec(rec, 0, 0, LatticeVector::zero(2));
        return count;
    };
    std::vector<std::size_t> expect{6, 10, 14};
    for (int K = 1; K <= 3; ++K) {
        std::size_t got = weight_basis(ctx, gamma, 2, K).size();
        if (got != expect[static_cast<std::size_t>(K - 1)] || got != oracle(2, K)) return false;
    }
    auto counts = weight_growth(ctx, gamma, 2, 1, 10);
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] <= counts[i - 1]) return false;
    return true;
}

// 8. n = 1 at mu_1 = 1: the classical twisted Heisenberg-Virasoro constants
bool criterion_classical() {
    Context ctx(1, default_params());
    ctx.mu_values = std::vector<Rational>{Rational(1)};
    auto e = [](std::int64_t m) {
        return AlgebraElement{{BasisSymbol::e(LatticeVector{{m}}), Scalar::one()}};
    };
    auto h = [](std::int64_t m) {
        return AlgebraElement{{BasisSymbol::h(LatticeVector{{m}}), Scalar::one()}};
    };
    for (std::int64_t m = -4; m <= 4; ++m)
        for (std::int64_t k = -4; k <= 4; ++k) {
            AlgebraElement want = scaled(e(m + k), Scalar(Rational(k - m)));
            if (m + k == 0) add_term(want, BasisSymbol::c1(), Scalar(Rational(m * m * m - m, 12)));
            if (!(bracket(ctx, AlgebraVariant::HVir, e(m), e(k)) == want)) return false;

            AlgebraElement want2 = scaled(h(m + k), Scalar(Rational(k)));
            if (m + k == 0) add_term(want2, BasisSymbol::c2(), Scalar(Rational(m * m - m)));
            if (!(bracket(ctx, AlgebraVariant::HVir, e(m), h(k)) == want2)) return false;

            AlgebraElement want3;
            if (m + k == 0) add_term(want3, BasisSymbol::c3(), Scalar(Rational(m, 3)));
            if (!(bracket(ctx, AlgebraVariant::HVir, h(m), h(k)) == want3)) return false;
        }
    return true;
}

// 9. generalized Verma: level-0 embedding agreement (B = 2, n = 2), grading,
//    and the level-1 count 2(2B+1)^(n-1) for B in {1, 2}
bool criterion_genverma() {
    Context ctx(2, default_params());
    TModuleSpec spec{1, Scalar::variable(ctx.id_of("a")), Scalar::variable(ctx.id_of("b")),
                     Scalar::variable(ctx.id_of("F")), false};
    GenVermaReport rep = genverma_level_check(ctx, spec, 1, 2);
    if (!(rep.embedding_ok && rep.grading_ok && rep.axioms_ok)) return false;
    for (int B : {1, 2}) {
        LatticeVector offset = LatticeVector::zero(2);
        offset.c.front() = -1;
        if (genverma_level_basis(ctx, 1, B, offset).size() !=
            2 * static_cast<std::size_t>(2 * B + 1))
            return false;
    }
    return true;
}

// 10. CLI contract: determinism, exit codes, round-trip fixpoint on a corpus
//     of 50 expressions, non-generic mu abort
bool criterion_cli() {
    if (run_cli("bracket --lhs \"E[1,0]\" --rhs \"E[-1,0]\"").code != 0) return false;
    if (run_cli("theta-check --which 1 --theta \"x^2\"").code != 1) return false;
    if (run_cli("bracket --lhs \"E[1,0]\"").code != 2) return false;
    if (run_cli("--mu 2,1 bracket --lhs \"E[1,-2]\" --rhs \"E[-1,2]\"").code != 1) return false;
    auto a = run_cli("cocycle-decompose --random --seed 9 --window-B 2");
    auto b = run_cli("cocycle-decompose --random --seed 9 --window-B 2");
    if (a.code != 0 || a.out != b.out || a.out.empty()) return false;

    Context ctx(2, default_params());
    std::mt19937 rng(515);
    std::uniform_int_distribution<int> coord(-2, 2);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> varid(0, ctx.size() - 1);
    for (int i = 0; i < 50; ++i) {
        AlgebraElement el;
        int t = nterms(rng);
        for (int j = 0; j < t; ++j) {
            int k = kind(rng);
            BasisSymbol s = k == 0   ? BasisSymbol::c1()
                            : k == 1 ? BasisSymbol::c3()
                                     : BasisSymbol{k == 2 ? SymbolKind::E : SymbolKind::H,
                                                   LatticeVector{{coord(rng), coord(rng)}}};
            Scalar c(coef(rng));
            if (coef(rng) > 0) c = c + Scalar::variable(varid(rng));
            if (coef(rng) > 3) c = c / Scalar(2);
            add_term(el, s, c);
        }
        std::string printed = to_string(el, ctx);
        if (!(parse_element(printed, ctx) == el)) return false;
        if (to_string(parse_element(printed, ctx), ctx) != printed) return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria{
        {"Lie algebra: antisymmetry + Jacobi, |alpha| <= 2, n in {1,2,3}", criterion_lie},
        {"cocycle defects vanish on the window (B=3, n=2, all generators)",
         criterion_cocycle_defects},
        {"cocycle decomposition round trip (20 seeded + pure coboundary)", criterion_decompose},
        {"functional-equation oracles with negative control", criterion_theta},
        {"intermediate-series axioms (symbolic) + reducibility probes", criterion_repmod},
        {"Verma representation property + weight covariance", criterion_verma},
        {"weight-multiplicity counts, oracle match, strict growth to K=10", criterion_growth},
        {"classical degeneration at n=1, mu=1, |m| <= 4", criterion_classical},
        {"generalized Verma embedding, grading, level-1 counts", criterion_genverma},
        {"CLI determinism, exit codes, round trips, genericity guard", criterion_cli},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool ok = false;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& e) {
            std::cout << "criterion " << i + 1 << ": exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " - "
                  << criteria[i].name << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
