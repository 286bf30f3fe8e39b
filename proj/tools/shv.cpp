// shv: exact symbolic calculator for the solenoidal Heisenberg-Virasoro
// algebra and its weight modules. Reports are JSON on stdout; exit code 0 on
// ok, 1 on a failed or inconsistent check, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shv/cocycles.hpp"
#include "shv/module_io.hpp"

using json = nlohmann::ordered_json;
using namespace shv;

namespace {

struct Session {
    int n = 2;
    std::vector<std::string> params = default_params();
    int window_B = 2;
    int degree_D = 2;
    int coord_K = 2;
    std::optional<std::vector<Rational>> mu;
    long seed = 0;
    bool pretty = false;
    bool exhaustive = false;

    Context context() const {
        Context ctx(n, params);
        ctx.mu_values = mu;
        return ctx;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(piece);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (auto& p : split(s, ',')) out.emplace_back(p);
    return out;
}

LatticeVector parse_lattice(const std::string& s, int n) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw SyntaxError("unterminated '['", body.size());
        body = body.substr(1, body.size() - 2);
    }
    LatticeVector v;
    for (auto& p : split(body, ',')) v.c.push_back(std::stoll(p));
    if (v.dim() != n) throw DimensionMismatch("lattice vector has wrong dimension");
    return v;
}

json report_skeleton(const std::string& command) {
    return json{{"command", command},
                {"status", "ok"},
                {"payload", json::object()},
                {"counterexamples", json::array()}};
}

void render(const json& rep, bool pretty) {
    if (!pretty) {
        std::cout << rep.dump() << "\n";
        return;
    }
    std::cout << rep["command"].get<std::string>() << ": "
              << rep["status"].get<std::string>() << "\n";
    for (auto& [k, v] : rep["payload"].items())
        std::cout << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
    for (auto& c : rep["counterexamples"]) std::cout << "  counterexample: " << c.dump() << "\n";
}

int finish(const json& rep, bool pretty) {
    render(rep, pretty);
    return rep["status"] == "ok" ? 0 : 1;
}

AlgebraVariant variant_of(const std::string& name) {
    if (name == "witt") return AlgebraVariant::SolWitt;
    if (name == "wa") return AlgebraVariant::WA;
    if (name == "hvir") return AlgebraVariant::HVir;
    throw CLI::ValidationError("--variant", "expected witt, wa or hvir");
}

// single basis symbol from its literal ("E[1,0]", "C2")
BasisSymbol parse_symbol(const std::string& text, const Context& ctx) {
    AlgebraElement el = parse_element(text, ctx);
    if (el.size() != 1 || !scalar_eq(el.begin()->second, Scalar::one()))
        throw SyntaxError("expected a bare basis symbol", 0);
    return el.begin()->first;
}

TModuleSpec tmod_spec_from(const Context& ctx, const std::string& a, const std::string& b,
                           const std::string& F, bool quotient) {
    return TModuleSpec{ctx.n(), parse_scalar(a, ctx), parse_scalar(b, ctx), parse_scalar(F, ctx),
                       quotient};
}

json symbol_pair(const Context& ctx, const BasisSymbol& x, const BasisSymbol& y) {
    return json{to_string(x, ctx), to_string(y, ctx)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic calculator for the solenoidal Heisenberg-Virasoro algebra"};
    app.require_subcommand(1);

    Session cfg;
    std::string config_path, mu_text, params_text;
    if (const char* env = std::getenv("SHV_CONFIG")) config_path = env;

    app.add_option("--config", config_path, "JSON config file (SessionConfig fields)");
    auto* on = app.add_option("--n", cfg.n, "lattice dimension");
    auto* oparams = app.add_option("--params", params_text, "comma-separated parameter names");
    auto* ob = app.add_option("--window-B", cfg.window_B, "coordinate window bound");
    auto* od = app.add_option("--D", cfg.degree_D, "max PBW degree");
    auto* ok = app.add_option("--K", cfg.coord_K, "PBW coordinate bound");
    auto* omu = app.add_option("--mu", mu_text, "comma-separated rational mu values");
    auto* oseed = app.add_option("--seed", cfg.seed, "seed for randomized sampling");
    app.add_flag("--pretty", cfg.pretty, "human-readable output instead of JSON");
    app.add_flag("--exhaustive", cfg.exhaustive,
                 "check every windowed case instead of seeded samples");

    // bracket
    std::string s_lhs, s_rhs, s_variant = "hvir";
    auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
    c_bracket->add_option("--lhs", s_lhs)->required();
    c_bracket->add_option("--rhs", s_rhs)->required();
    c_bracket->add_option("--variant", s_variant, "witt | wa | hvir");

    // jacobi
    std::string s_x, s_y, s_z;
    long samples = 50;
    auto* c_jacobi = app.add_subcommand(
        "jacobi", "Jacobi + antisymmetry defects, for a given triple or over the window");
    c_jacobi->add_option("--x", s_x);
    c_jacobi->add_option("--y", s_y);
    c_jacobi->add_option("--z", s_z);
    c_jacobi->add_option("--samples", samples, "random triples to check (without --exhaustive)");
    c_jacobi->add_option("--variant", s_variant, "witt | wa | hvir");

    // cocycle-check
    int which = 1;
    auto* c_ccheck = app.add_subcommand("cocycle-check",
                                        "2-cocycle condition for a generator over the window");
    c_ccheck->add_option("--which", which, "generator index 1|2|3")->required();

    // cocycle-decompose
    std::string s_a, s_cob;
    bool random_cocycle = false;
    auto* c_cdec = app.add_subcommand(
        "cocycle-decompose", "build a1*C1 + a2*C2 + a3*C3 + delta(b) and decompose it back");
    c_cdec->add_option("--a", s_a, "three comma-separated scalar expressions");
    c_cdec->add_option("--b", s_cob, "semicolon-separated SYMBOL=scalar assignments");
    c_cdec->add_flag("--random", random_cocycle, "sample rational a and b from --seed");

    // theta-check
    std::string s_theta;
    auto* c_theta = app.add_subcommand("theta-check",
                                       "functional-equation defect for a candidate theta(x)");
    c_theta->add_option("--which", which, "equation index 1|2|3")->required();
    c_theta->add_option("--theta", s_theta, "scalar expression in x")->required();

    // shared T-module options
    std::string s_ta = "a", s_tb = "b", s_tF = "F", s_kappa;
    bool quotient_v0 = false;
    auto add_tmod_options = [&](CLI::App* c) {
        c->add_option("--a", s_ta, "module parameter a (scalar expression)");
        c->add_option("--b", s_tb, "module parameter b");
        c->add_option("--F", s_tF, "module parameter F");
        c->add_flag("--quotient-v0", quotient_v0, "drop the kappa=0 line (needs a=b=F=0)");
    };

    auto* c_tact = app.add_subcommand("tmod-act", "act on a basis vector v_kappa");
    add_tmod_options(c_tact);
    c_tact->add_option("--x", s_x, "acting element")->required();
    c_tact->add_option("--kappa", s_kappa, "lattice vector, e.g. [1,0]")->required();

    auto* c_taxioms = app.add_subcommand("tmod-axioms", "module-axiom defects over the window");
    add_tmod_options(c_taxioms);
    c_taxioms->add_option("--samples", samples, "random cases to check (without --exhaustive)");

    auto* c_tsub = app.add_subcommand("tmod-submodule",
                                      "windowed invariant-subspace probe (reducibility)");
    add_tmod_options(c_tsub);

    // verma-act
    std::string s_ops, s_gamma, s_klist;
    bool lowest = false;
    auto* c_vact = app.add_subcommand("verma-act",
                                      "apply elements (right to left) to the highest-weight vector");
    c_vact->add_option("--ops", s_ops, "semicolon-separated elements")->required();
    c_vact->add_flag("--lowest", lowest, "lowest-weight variant");

    auto* c_vweights = app.add_subcommand("verma-weights", "weight-space basis at offset gamma");
    c_vweights->add_option("--gamma", s_gamma, "lattice vector")->required();
    c_vweights->add_flag("--lowest", lowest);

    auto* c_vgrowth = app.add_subcommand("verma-growth",
                                         "weight multiplicities for increasing coordinate bounds");
    c_vgrowth->add_option("--gamma", s_gamma, "lattice vector")->required();
    c_vgrowth->add_option("--K", s_klist, "comma-separated coordinate bounds")->required();
    c_vgrowth->add_flag("--lowest", lowest);

    auto* c_gv = app.add_subcommand("genverma-level",
                                    "generalized Verma checks at one grading level");
    add_tmod_options(c_gv);
    int level = 1;
    c_gv->add_option("--level", level, "grading level >= 1");

    // global options may also appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        // config file fills anything not given on the command line
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot read config file " + config_path);
            json j = json::parse(in);
            if (!on->count() && j.contains("n")) cfg.n = j["n"].get<int>();
            if (!oparams->count() && j.contains("params"))
                cfg.params = j["params"].get<std::vector<std::string>>();
            if (!ob->count() && j.contains("window_B")) cfg.window_B = j["window_B"].get<int>();
            if (!od->count() && j.contains("degree_D")) cfg.degree_D = j["degree_D"].get<int>();
            if (!ok->count() && j.contains("coord_K")) cfg.coord_K = j["coord_K"].get<int>();
            if (!oseed->count() && j.contains("seed")) cfg.seed = j["seed"].get<long>();
            if (!omu->count() && j.contains("mu_values") && !j["mu_values"].is_null()) {
                std::vector<Rational> mu;
                for (auto& v : j["mu_values"]) mu.emplace_back(v.get<std::string>());
                cfg.mu = std::move(mu);
            }
        }
        if (oparams->count()) cfg.params = split(params_text, ',');
        if (omu->count()) cfg.mu = parse_rational_list(mu_text);
        if (cfg.mu && static_cast<int>(cfg.mu->size()) != cfg.n)
            throw DimensionMismatch("--mu must have n entries");

        Context ctx = cfg.context();
        std::mt19937 rng(static_cast<std::mt19937::result_type>(cfg.seed));

        if (*c_bracket) {
            json rep = report_skeleton("bracket");
            AlgebraVariant var = variant_of(s_variant);
            AlgebraElement out =
                bracket(ctx, var, parse_element(s_lhs, ctx), parse_element(s_rhs, ctx));
            rep["payload"]["result"] = to_string(out, ctx);
            return finish(rep, cfg.pretty);
        }

        if (*c_jacobi) {
            json rep = report_skeleton("jacobi");
            AlgebraVariant var = variant_of(s_variant);
            auto check = [&](const AlgebraElement& x, const AlgebraElement& y,
                             const AlgebraElement& z) {
                AlgebraElement d = jacobi_defect(ctx, var, x, y, z);
                if (!d.empty()) {
                    rep["status"] = "fail";
                    rep["counterexamples"].push_back(
                        json{{"x", to_string(x, ctx)},
                             {"y", to_string(y, ctx)},
                             {"z", to_string(z, ctx)},
                             {"defect", to_string(d, ctx)}});
                }
            };
            if (!s_x.empty() || !s_y.empty() || !s_z.empty()) {
                check(parse_element(s_x, ctx), parse_element(s_y, ctx), parse_element(s_z, ctx));
                rep["payload"]["checked"] = 1;
            } else {
                std::vector<BasisSymbol> syms = Cochain2::wa_window_symbols(ctx, cfg.window_B);
                if (var == AlgebraVariant::HVir) {
                    syms.push_back(BasisSymbol::c1());
                    syms.push_back(BasisSymbol::c2());
                    syms.push_back(BasisSymbol::c3());
                } else if (var == AlgebraVariant::SolWitt) {
                    std::erase_if(syms, [](const BasisSymbol& s) { return s.kind != SymbolKind::E; });
                }
                auto as_el = [](const BasisSymbol& s) {
                    return AlgebraElement{{s, Scalar::one()}};
                };
                std::size_t checked = 0;
                if (cfg.exhaustive) {
                    for (std::size_t i = 0; i < syms.size() && rep["status"] == "ok"; ++i)
                        for (std::size_t j = i; j < syms.size() && rep["status"] == "ok"; ++j)
                            for (std::size_t k = j; k < syms.size() && rep["status"] == "ok"; ++k) {
                                check(as_el(syms[i]), as_el(syms[j]), as_el(syms[k]));
                                ++checked;
                            }
                } else {
                    std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
                    for (long t = 0; t < samples && rep["status"] == "ok"; ++t) {
                        check(as_el(syms[pick(rng)]), as_el(syms[pick(rng)]),
                              as_el(syms[pick(rng)]));
                        ++checked;
                    }
                }
                rep["payload"]["checked"] = checked;
            }
            return finish(rep, cfg.pretty);
        }

        if (*c_ccheck) {
            json rep = report_skeleton("cocycle-check");
            auto C = generator_cocycle(which);
            auto syms = Cochain2::wa_window_symbols(ctx, cfg.window_B);
            std::size_t checked = 0;
            for (std::size_t i = 0; i < syms.size() && rep["status"] == "ok"; ++i)
                for (std::size_t j = i + 1; j < syms.size() && rep["status"] == "ok"; ++j)
                    for (std::size_t k = j + 1; k < syms.size(); ++k) {
                        Scalar d = cocycle_defect(ctx, C, syms[i], syms[j], syms[k]);
                        ++checked;
                        if (!d.is_zero()) {
                            rep["status"] = "fail";
                            rep["counterexamples"].push_back(
                                json{{"triple",
                                      json{to_string(syms[i], ctx), to_string(syms[j], ctx),
                                           to_string(syms[k], ctx)}},
                                     {"defect", to_string(d, ctx)}});
                            break;
                        }
                    }
            rep["payload"]["which"] = which;
            rep["payload"]["triples_checked"] = checked;
            return finish(rep, cfg.pretty);
        }

        if (*c_cdec) {
            json rep = report_skeleton("cocycle-decompose");
            std::array<Scalar, 3> a{Scalar::zero(), Scalar::zero(), Scalar::zero()};
            Cochain1 b(cfg.window_B);
            if (random_cocycle) {
                std::uniform_int_distribution<int> num(-9, 9);
                std::uniform_int_distribution<int> den(1, 9);
                for (auto& v : a) v = Scalar(Rational(num(rng), den(rng)));
                for (auto& s : Cochain2::wa_window_symbols(ctx, cfg.window_B))
                    b.set(s, Scalar(Rational(num(rng), den(rng))));
            } else {
                if (!s_a.empty()) {
                    auto parts = split(s_a, ',');
                    if (parts.size() != 3) throw SyntaxError("--a needs three expressions", 0);
                    for (int i = 0; i < 3; ++i)
                        a[static_cast<std::size_t>(i)] = parse_scalar(parts[static_cast<std::size_t>(i)], ctx);
                }
                for (auto& piece : split(s_cob, ';')) {
                    if (piece.empty()) continue;
                    auto eq = piece.find('=');
                    if (eq == std::string::npos) throw SyntaxError("--b wants SYMBOL=expr", 0);
                    b.set(parse_symbol(piece.substr(0, eq), ctx),
                          parse_scalar(piece.substr(eq + 1), ctx));
                }
            }
            Cochain2 db = coboundary(ctx, b);
            Cochain2 built = Cochain2::tabulate(
                ctx,
                [&](const Context& c, const BasisSymbol& x, const BasisSymbol& y) {
                    Scalar v;
                    for (int g = 1; g <= 3; ++g)
                        v += a[static_cast<std::size_t>(g - 1)] *
                             generator_cocycle_value(c, g, x, y);
                    return v + db.get(x, y);
                },
                cfg.window_B);
            DecomposeResult res = decompose_cocycle(ctx, built, cfg.window_B);
            if (auto* bad = std::get_if<InconsistentCocycle>(&res)) {
                rep["status"] = "inconsistent";
                rep["counterexamples"].push_back(
                    json{{"triple", json{to_string(bad->x, ctx), to_string(bad->y, ctx),
                                         to_string(bad->z, ctx)}},
                         {"defect", to_string(bad->defect, ctx)}});
                return finish(rep, cfg.pretty);
            }
            auto& dec = std::get<CocycleDecomposition>(res);
            json ja = json::array(), jb = json::object();
            for (auto& v : dec.a) ja.push_back(to_string(v, ctx));
            for (auto& [s, v] : dec.cob.values()) jb[to_string(s, ctx)] = to_string(v, ctx);
            rep["payload"]["a"] = ja;
            rep["payload"]["b"] = jb;
            // round trip: the recovered data reproduces the input on the window
            Cochain2 db2 = coboundary(ctx, dec.cob);
            Cochain2 again = Cochain2::tabulate(
                ctx,
                [&](const Context& c, const BasisSymbol& x, const BasisSymbol& y) {
                    Scalar v;
                    for (int g = 1; g <= 3; ++g)
                        v += dec.a[static_cast<std::size_t>(g - 1)] *
                             generator_cocycle_value(c, g, x, y);
                    return v + db2.get(x, y);
                },
                cfg.window_B);
            auto window_syms = Cochain2::wa_window_symbols(ctx, cfg.window_B);
            std::set<BasisSymbol> in_set(window_syms.begin(), window_syms.end());
            bool roundtrip = true;
            for (auto& s : window_syms)
                for (auto& t : window_syms) {
                    // only pairs the solver saw are pinned down
                    AlgebraElement br = bracket_basis(ctx, AlgebraVariant::WA, s, t);
                    bool inside = true;
                    for (auto& [sym, cc] : br)
                        if (!in_set.count(sym)) inside = false;
                    if (!inside) continue;
                    if (!scalar_eq(again.get(s, t), built.get(s, t))) {
                        roundtrip = false;
                        rep["counterexamples"].push_back(json{{"pair", symbol_pair(ctx, s, t)}});
                    }
                }
            rep["payload"]["roundtrip"] = roundtrip;
            if (!roundtrip) rep["status"] = "fail";
            return finish(rep, cfg.pretty);
        }

        if (*c_theta) {
            json rep = report_skeleton("theta-check");
            Scalar d = theta_defect(ctx, which, parse_scalar(s_theta, ctx));
            rep["payload"]["which"] = which;
            rep["payload"]["defect"] = to_string(d, ctx);
            if (!d.is_zero()) rep["status"] = "fail";
            return finish(rep, cfg.pretty);
        }

        if (*c_tact || *c_taxioms || *c_tsub) {
            TModuleSpec spec = tmod_spec_from(ctx, s_ta, s_tb, s_tF, quotient_v0);
            if (*c_tact) {
                json rep = report_skeleton("tmod-act");
                TVector v{{parse_lattice(s_kappa, ctx.n()), Scalar::one()}};
                TVector out = t_act(ctx, spec, parse_element(s_x, ctx), v);
                rep["payload"]["result"] = to_string(out, ctx);
                return finish(rep, cfg.pretty);
            }
            if (*c_taxioms) {
                json rep = report_skeleton("tmod-axioms");
                auto window = lattice_window(ctx.n(), cfg.window_B);
                std::vector<BasisSymbol> gens;
                for (auto& al : window) {
                    gens.push_back(BasisSymbol::e(al));
                    gens.push_back(BasisSymbol::h(al));
                }
                auto check = [&](const BasisSymbol& x, const BasisSymbol& y,
                                 const LatticeVector& kk) {
                    TVector d = t_axiom_defect(ctx, spec, x, y, kk);
                    if (!d.empty()) {
                        rep["status"] = "fail";
                        rep["counterexamples"].push_back(
                            json{{"x", to_string(x, ctx)},
                                 {"y", to_string(y, ctx)},
                                 {"kappa", to_string(kk)},
                                 {"defect", to_string(d, ctx)}});
                    }
                };
                std::size_t checked = 0;
                if (cfg.exhaustive) {
                    for (auto& x : gens)
                        for (auto& y : gens)
                            for (auto& kk : window) {
                                check(x, y, kk);
                                ++checked;
                                if (rep["status"] != "ok") goto taxioms_done;
                            }
                } else {
                    std::uniform_int_distribution<std::size_t> pg(0, gens.size() - 1);
                    std::uniform_int_distribution<std::size_t> pw(0, window.size() - 1);
                    for (long t = 0; t < samples && rep["status"] == "ok"; ++t) {
                        check(gens[pg(rng)], gens[pg(rng)], window[pw(rng)]);
                        ++checked;
                    }
                }
            taxioms_done:
                rep["payload"]["checked"] = checked;
                return finish(rep, cfg.pretty);
            }
            json rep = report_skeleton("tmod-submodule");
            TSubmoduleReport sub = t_submodule_window(ctx, spec, cfg.window_B);
            json spaces = json::array();
            for (auto& sp : sub.subspaces) {
                json one = json::array();
                for (auto& kk : sp) one.push_back(to_string(kk));
                spaces.push_back(one);
            }
            rep["payload"]["subspaces"] = spaces;
            rep["payload"]["edge_effects"] = sub.edge_effects;
            return finish(rep, cfg.pretty);
        }

        if (*c_vact) {
            json rep = report_skeleton("verma-act");
            HighestWeight hw = HighestWeight::symbolic(ctx);
            VermaVector v{{PBWMonomial{}, Scalar::one()}};
            auto ops = split(s_ops, ';');
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                if (it->empty()) continue;
                v = verma_act(ctx, hw, parse_element(*it, ctx), v, {lowest});
            }
            rep["payload"]["result"] = to_string(v, ctx);
            return finish(rep, cfg.pretty);
        }

        if (*c_vweights) {
            json rep = report_skeleton("verma-weights");
            auto basis = weight_basis(ctx, parse_lattice(s_gamma, ctx.n()), cfg.degree_D,
                                      cfg.coord_K, {lowest});
            json monos = json::array();
            for (auto& m : basis) monos.push_back(to_string(m, ctx));
            rep["payload"]["count"] = basis.size();
            rep["payload"]["monomials"] = monos;
            return finish(rep, cfg.pretty);
        }

        if (*c_vgrowth) {
            json rep = report_skeleton("verma-growth");
            LatticeVector gamma = parse_lattice(s_gamma, ctx.n());
            json counts = json::array();
            for (auto& p : split(s_klist, ','))
                counts.push_back(
                    weight_basis(ctx, gamma, cfg.degree_D, std::stoi(p), {lowest}).size());
            rep["payload"]["counts"] = counts;
            return finish(rep, cfg.pretty);
        }

        if (*c_gv) {
            json rep = report_skeleton("genverma-level");
            TModuleSpec spec{ctx.n() - 1, parse_scalar(s_ta, ctx), parse_scalar(s_tb, ctx),
                             parse_scalar(s_tF, ctx), quotient_v0};
            GenVermaReport r = genverma_level_check(ctx, spec, level, cfg.window_B);
            rep["payload"]["embedding_ok"] = r.embedding_ok;
            rep["payload"]["grading_ok"] = r.grading_ok;
            rep["payload"]["axioms_ok"] = r.axioms_ok;
            rep["payload"]["level_basis_count"] = r.level_basis_count;
            if (!(r.embedding_ok && r.grading_ok && r.axioms_ok)) {
                rep["status"] = "fail";
                rep["counterexamples"].push_back(json{{"reason", r.failure}});
            }
            return finish(rep, cfg.pretty);
        }

        std::cerr << "no command\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // domain failures (non-generic mu, dimension clashes, ...) are status 1
        json rep = report_skeleton("error");
        rep["status"] = "fail";
        rep["payload"]["error"] = e.what();
        std::cout << rep.dump() << "\n";
        return 1;
    }
}
