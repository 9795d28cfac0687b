#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "motzeta/acceptance/acceptance.hpp"
#include "motzeta/error.hpp"
#include "motzeta/exactalg/expr.hpp"
#include "motzeta/io/json_io.hpp"

namespace {

using namespace motzeta;
using io::Json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

std::string output_path;

// Flat objects print on one line, anything nested is indented.
std::string format(const Json& j) {
    if (!j.is_object()) return j.dump(2);
    for (const auto& [k, v] : j.items())
        if (v.is_structured()) return j.dump(2);
    std::string out = "{ ";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
        out += (first ? "" : ", ") + Json(k).dump() + ": " + v.dump();
        first = false;
    }
    return out + (first ? "}" : " }");
}

void emit_raw(const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw SchemaError(output_path + ": cannot write output file");
    out << text;
}

void emit(const std::string& text) { emit_raw(text + "\n"); }

void emit(const Json& j) { emit(format(j)); }

int verdict_status(bool holds) { return holds ? kOk : kCheckFailed; }

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw SchemaError("--primes: '" + text + "' is not a comma-separated list of primes");
        const auto p = std::stoull(part);
        if (!graph::is_prime(p)) throw SchemaError("--primes: " + part + " is not prime");
        out.push_back(p);
    }
    return out;
}

struct Runner {
    std::function<int()> run;
};

void add_graph(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("graph", "Kirchhoff polynomials and point counts of graph hypersurfaces");
    cmd->require_subcommand(1);

    static std::string source, route = "both", primes, kernel = "automatic";
    static std::size_t holdout = 3;

    auto* kir = cmd->add_subcommand("kirchhoff",
                                    "Psi_G = sum over spanning trees T of prod_{e not in T} x_e (matrix-tree theorem)");
    kir->add_option("graph", source, "graph JSON file, inline JSON or builtin:NAME")->required();
    kir->add_option("--route", route, "trees, determinant or both (both cross-checks)")
        ->check(CLI::IsMember({"trees", "determinant", "both"}));
    kir->callback([&r] {
        r.run = [] {
            const auto g = io::load_graph(source);
            alg::MultiPoly psi;
            if (route == "trees") psi = graph::kirchhoff_by_trees(g);
            else if (route == "determinant") psi = graph::kirchhoff_by_determinant(g);
            else psi = graph::kirchhoff(g);
            emit(Json{{"edges", g.num_edges()}, {"loops", g.loop_number()}, {"route", route}, {"psi", psi.to_string()}});
            return kOk;
        };
    });

    auto* count = cmd->add_subcommand("count", "#{x in F_p^|E| : Psi_G(x) = 0}, affine and projective");
    count->add_option("graph", source, "graph JSON file, inline JSON or builtin:NAME")->required();
    count->add_option("--primes", primes, "comma-separated primes")->required();
    count->add_option("--kernel", kernel, "automatic, exhaustive or elimination")
        ->check(CLI::IsMember({"automatic", "exhaustive", "elimination"}));
    count->callback([&r] {
        r.run = [] {
            const auto g = io::load_graph(source);
            graph::CountOptions opts;
            opts.kernel = kernel == "exhaustive"    ? graph::CountKernel::exhaustive
                          : kernel == "elimination" ? graph::CountKernel::elimination
                                                    : graph::CountKernel::automatic;
            Json counts = Json::array();
            for (auto p : parse_primes(primes)) counts.push_back(io::to_json(graph::count_points(g, p, opts)));
            emit(Json{{"counts", counts}});
            return kOk;
        };
    });

    auto* poly = cmd->add_subcommand(
        "poly-test", "Fit the affine count as a polynomial in p and test it on held-out primes (Kontsevich question)");
    poly->add_option("graph", source, "graph JSON file, inline JSON or builtin:NAME")->required();
    poly->add_option("--primes", primes, "comma-separated primes (default: the first |E|+1+holdout)");
    poly->add_option("--holdout", holdout, "number of held-out primes")->check(CLI::Range(1, 20));
    poly->callback([&r] {
        r.run = [] {
            const auto g = io::load_graph(source);
            const auto ps = primes.empty() ? graph::first_primes(g.num_edges() + 1 + holdout) : parse_primes(primes);
            const auto report = graph::polynomiality_test(g, ps, holdout);
            emit(io::to_json(report));
            return report.status == graph::FitReport::Status::non_polynomial ? kCheckFailed : kOk;
        };
    });
}

void add_curve(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("curve", "Point counts and zeta functions of curves over F_p");
    cmd->require_subcommand(1);

    static std::string source;
    static unsigned n = 4;
    static std::size_t order = 8;

    auto* count = cmd->add_subcommand("count", "#X(F_{p^k}) for k = 1..n by enumeration");
    count->add_option("curve", source, "curve JSON file, inline JSON or builtin:NAME")->required();
    count->add_option("--n", n, "largest extension degree")->check(CLI::Range(1, 12));
    count->callback([&r] {
        r.run = [] {
            const auto c = io::load_curve(source);
            emit(Json{{"curve", io::to_json(c)}, {"genus", c.genus()}, {"counts", curve::count_tower(c, n)}});
            return kOk;
        };
    });

    auto* zeta = cmd->add_subcommand("zeta", "Z(X, t) = exp(sum N_n t^n / n) = P(t) / ((1 - t)(1 - q t))");
    zeta->add_option("curve", source, "curve JSON file, inline JSON or builtin:NAME")->required();
    zeta->add_option("--order", order, "series order")->check(CLI::Range(1, 64));
    zeta->callback([&r] {
        r.run = [] {
            const auto z = curve::hasse_weil(io::load_curve(source));
            auto j = io::to_json(z);
            j["series"] = io::series_json(z.series(order).coeffs());
            emit(j);
            return kOk;
        };
    });

    auto* fe = cmd->add_subcommand("fe-check", "Z(X, 1/(q t)) = q^(1-g) t^(2-2g) Z(X, t) as rational functions");
    fe->add_option("curve", source, "curve JSON file, inline JSON or builtin:NAME")->required();
    fe->callback([&r] {
        r.run = [] {
            const auto v = curve::functional_equation_check(curve::hasse_weil(io::load_curve(source)));
            emit(io::to_json(v));
            return verdict_status(v.holds);
        };
    });

    auto* pel = cmd->add_subcommand("pellikaan", "Two-variable zeta Z(X, t, u); checks Z(X, t, q) = Z(X, t)");
    pel->add_option("curve", source, "curve JSON file, inline JSON or builtin:NAME")->required();
    pel->callback([&r] {
        r.run = [] {
            const auto c = io::load_curve(source);
            const auto z = curve::pellikaan_zeta(c);
            const auto hw = curve::hasse_weil(c).zeta();
            const auto at_q = curve::specialize_u(z, alg::BigRational(static_cast<unsigned long>(c.p())));
            const bool holds = at_q == hw;
            emit(Json{{"zeta_tu", curve::to_string_u(z)}, {"at_u_eq_q", at_q.to_string("t")}, {"hasse_weil", hw.to_string("t")},
                      {"holds", holds}});
            return verdict_status(holds);
        };
    });
}

void add_k0(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("k0", "Classes in the Grothendieck ring of varieties, localized at L");
    cmd->require_subcommand(1);

    static std::vector<std::string> args;
    static std::string at, klass, datum;
    static std::size_t order = 8;

    auto* cls = cmd->add_subcommand(
        "class", "[GL_n], [SL_n], [P^n], quadratic forms of rank r, or [G] for a root datum; e.g. 'class gl 2'");
    cls->add_option("args", args, "gl N | sl N | pn N | sym N R | group NAME")->required()->expected(2, 3);
    cls->add_option("--at", at, "specialize L -> q and print the count instead");
    cls->callback([&r] {
        r.run = [] {
            auto number = [](const std::string& s) {
                if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                    throw SchemaError("class: '" + s + "' is not a nonnegative integer");
                return std::stol(s);
            };
            const auto& kind = args[0];
            k0::K0Element value;
            std::string text;
            if (kind == "gl" && args.size() == 2) {
                const auto f = k0::class_gl_factors(number(args[1]));
                value = k0::class_gl(number(args[1]));
                text = k0::factored_string(f);
            } else if (kind == "sl" && args.size() == 2) {
                value = k0::class_sl(number(args[1]));
            } else if (kind == "pn" && args.size() == 2) {
                value = k0::class_projective_space(number(args[1])).to_k0();
            } else if (kind == "sym" && args.size() == 3) {
                value = k0::class_sym_rank(number(args[1]), number(args[2]));
            } else if (kind == "group" && args.size() == 2) {
                value = k0::class_semisimple(io::load_root_datum(args[1]));
            } else {
                throw SchemaError("class: expected gl N, sl N, pn N, sym N R or group NAME");
            }
            if (!at.empty()) emit(alg::to_string(k0::specialize(value, alg::parse_rational(at))));
            else emit(text.empty() ? value.to_string("L") : text);
            return kOk;
        };
    });

    auto* sigma = cmd->add_subcommand("sigma", "Kapranov zeta sum_n [Sym^n X] t^n = prod (1 - L^m t)^(-a_m)");
    sigma->add_option("class", klass, "mixed-Tate class as a Laurent polynomial in L, e.g. 'L^2+L+1'")->required();
    sigma->add_option("--order", order, "series order")->check(CLI::Range(1, 32));
    sigma->callback([&r] {
        r.run = [] {
            const auto x = k0::MixedTateClass::from_k0(alg::parse_fraction(klass));
            if (!x) throw SchemaError("sigma: '" + klass + "' is not an integer Laurent polynomial in L");
            emit(Json{{"class", x->to_string()}, {"coefficients", io::series_json(k0::sigma_t(*x, order).coeffs())}});
            return kOk;
        };
    });

    auto* weyl = cmd->add_subcommand("weyl-check", "sum_w t^l(w) = prod (1 - t^d_i)/(1 - t), and the Bruhat identity for [G]");
    weyl->add_option("datum", datum, "root datum name (A1, A2, B2, G2, SL2..SL6) or JSON")->required();
    weyl->callback([&r] {
        r.run = [] {
            const auto rd = io::load_root_datum(datum);
            const auto w = k0::weyl_poincare_check(rd);
            const auto b = k0::bruhat_check(rd);
            emit(Json{{"datum", rd.name}, {"poincare", io::to_json(w)}, {"bruhat", io::to_json(b)}});
            return verdict_status(w.holds && b.holds);
        };
    });
}

void add_motzeta(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("motzeta", "Motivic zeta functions of Kimura-finite objects");
    cmd->require_subcommand(1);

    static std::string source;
    static std::size_t order = 8;
    static long d = 2;

    auto* zeta = cmd->add_subcommand("zeta", "Z_mot(M, t) = sum [Sym^n M] t^n as a rational function in t over Q(L)");
    zeta->add_option("object", source, "object JSON file, inline JSON or builtin:CURVE")->required();
    zeta->add_option("--order", order, "series order")->check(CLI::Range(1, 32));
    zeta->callback([&r] {
        r.run = [] {
            const auto z = mot::zeta_mot(io::load_kimura(source), order);
            emit(Json{{"zeta", mot::to_string(z.value)}, {"series", io::series_json(z.series.coeffs())}});
            return kOk;
        };
    });

    auto* kahn = cmd->add_subcommand("kahn-check", "Z(M^v, 1/t) = (-1)^chi_+ det(M) t^chi Z(M, t)");
    kahn->add_option("object", source, "object JSON file, inline JSON or builtin:CURVE")->required();
    kahn->callback([&r] {
        r.run = [] {
            const auto v = mot::kahn_check(io::load_kimura(source));
            emit(io::to_json(v));
            return verdict_status(v.holds);
        };
    });

    auto* special = cmd->add_subcommand("special", "Z_mot(M, L^-d)");
    special->add_option("object", source, "object JSON file, inline JSON or builtin:CURVE")->required();
    special->add_option("--d", d, "evaluate at t = L^-d");
    special->callback([&r] {
        r.run = [] {
            const auto z = mot::zeta_mot(io::load_kimura(source));
            emit(Json{{"d", d}, {"value", mot::special_value(z, d).to_string("L")}});
            return kOk;
        };
    });
}

void add_artin(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("artin", "Artin L-functions of finite group actions on curves");
    cmd->require_subcommand(1);

    static std::string source, character = "triv", formalism = "all";
    static unsigned n = 1;
    static std::size_t order = 0;

    // Fixed points off P^1 come from enumeration over F_{q^(n ord g)}.
    auto effective_order = [](const artin::NamedAction& a) -> std::size_t {
        if (order) return order;
        return a.action.curve.model() == curve::CurveData::Model::projective_line ? 8 : 4;
    };

    auto character_of = [](const artin::NamedAction& a) {
        return a.group.character(a.group.character_index(character));
    };

    auto* nu = cmd->add_subcommand("nu", "nu_n(chi) = (1/|G|) sum_g chi(g^-1) #Fix(g F^n)");
    nu->add_option("action", source, "action JSON file, inline JSON or builtin:NAME")->required();
    nu->add_option("--character", character, "character name");
    nu->add_option("--n", n, "Frobenius power")->check(CLI::Range(1, 16));
    nu->callback([&r, character_of] {
        r.run = [character_of] {
            const auto a = io::load_action(source);
            const auto v = artin::nu_n(a.action, a.group, character_of(a), n);
            emit(Json{{"action", a.name}, {"character", character}, {"n", n}, {"nu", alg::to_string(v)}});
            return kOk;
        };
    });

    auto* l = cmd->add_subcommand("L", "L(X, chi, t) = exp(sum nu_n(chi) t^n / n)");
    l->add_option("action", source, "action JSON file, inline JSON or builtin:NAME")->required();
    l->add_option("--character", character, "character name");
    l->add_option("--order", order, "series order (default 8 on P^1, 4 otherwise)")->check(CLI::Range(1, 16));
    l->callback([&r, character_of, effective_order] {
        r.run = [character_of, effective_order] {
            const auto a = io::load_action(source);
            emit(io::to_json(artin::artin_L(a.action, a.group, character_of(a), effective_order(a), character)));
            return kOk;
        };
    });

    auto* check = cmd->add_subcommand(
        "check", "Additivity, induction, inflation and Z(X, t) = prod_chi L(X, chi, t)^chi(1)");
    check->add_option("action", source, "action JSON file, inline JSON or builtin:NAME")->required();
    check->add_option("--formalism", formalism, "additivity, induction, inflation, factorization or all");
    check->add_option("--order", order, "t-order (default 8 on P^1, 4 otherwise)")->check(CLI::Range(1, 16));
    check->callback([&r, effective_order] {
        r.run = [effective_order] {
            const auto a = io::load_action(source);
            std::vector<artin::Formalism> which;
            if (formalism == "all") {
                which = {artin::Formalism::additivity, artin::Formalism::factorization};
                if (a.induction) which.push_back(artin::Formalism::induction);
                if (a.inflation) which.push_back(artin::Formalism::inflation);
            } else {
                try {
                    which = {artin::parse_formalism(formalism)};
                } catch (const Error& e) {
                    throw SchemaError(std::string("--formalism: ") + e.what());
                }
            }
            artin::FormalismInput input;
            input.induction = a.induction;
            input.inflation = a.inflation;
            Json results = Json::object();
            bool holds = true;
            for (auto f : which) {
                const auto v = artin::formalism_check(a.action, a.group, f, effective_order(a), input);
                results[artin::to_string(f)] = io::to_json(v);
                holds = holds && v.holds;
            }
            emit(Json{{"action", a.name}, {"order", effective_order(a)}, {"checks", results}, {"holds", holds}});
            return verdict_status(holds);
        };
    });
}

void add_bun(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("bun", "Motivic classes of moduli stacks of G-bundles on curves");
    cmd->require_subcommand(1);

    static std::string curve_source, object, group = "SL2";
    static long genus = -1, n = 2;
    static std::size_t order = 12;

    auto* rhs = cmd->add_subcommand("rhs", "L^((g-1) dim G) prod_i Z(X, L^-d_i)");
    rhs->add_option("--curve", curve_source, "curve JSON file, inline JSON or builtin:NAME");
    rhs->add_option("--object", object, "Kimura object in place of a curve (needs --genus)");
    rhs->add_option("--genus", genus, "genus of the curve the object stands for");
    rhs->add_option("--group", group, "root datum name or JSON");
    rhs->add_option("--order", order, "terms of the expansion in L^-1")->check(CLI::Range(1, 64));
    rhs->callback([&r] {
        r.run = [] {
            if (curve_source.empty() == object.empty()) throw SchemaError("rhs: give exactly one of --curve and --object");
            const auto rd = io::load_root_datum(group);
            if (!curve_source.empty()) {
                const auto c = io::load_curve(curve_source);
                const auto z = mot::zeta_mot(mot::KimuraObject::curve(curve::hasse_weil(c)));
                emit(io::to_json(bun::bun_rhs(rd, z, c.genus(), order)));
            } else {
                if (genus < 0) throw SchemaError("rhs: --object needs --genus");
                emit(io::to_json(bun::bun_rhs(rd, mot::zeta_mot(io::load_kimura(object)), genus, order)));
            }
            return kOk;
        };
    });

    auto* harder = cmd->add_subcommand(
        "harder", "sum over SL_n-bundles of 1/|Aut| = q^((g-1)(n^2-1)) prod_{i=2}^n zeta_X(i), both sides exactly");
    harder->add_option("--curve", curve_source, "curve JSON file, inline JSON or builtin:NAME")->required();
    harder->add_option("--n", n, "rank")->check(CLI::Range(1, 6));
    harder->callback([&r] {
        r.run = [] {
            const auto h = bun::harder_check(io::load_curve(curve_source), n);
            emit(io::to_json(h));
            return verdict_status(h.holds);
        };
    });
}

void add_periods(CLI::App& app, Runner& r) {
    auto* cmd = app.add_subcommand("periods", "Multiple zeta values and Feynman parametric integrals");
    cmd->require_subcommand(1);

    static std::string index, source;
    static double tol = 1e-8, D = 4, h = 0;
    static std::uint64_t samples = 100000, seed = 42;

    auto* mzv = cmd->add_subcommand("mzv", "zeta(s_1, ..., s_k) = sum_{n_1 > ... > n_k >= 1} prod n_i^-s_i");
    mzv->add_option("index", index, "comma-separated exponents, e.g. 2,1")->required();
    mzv->add_option("--tol", tol, "tail bound target (>= 1e-10)");
    mzv->callback([&r] {
        r.run = [] {
            const auto res = periods::mzv_detailed(periods::MzvIndex::parse(index), tol);
            emit(Json{{"index", index}, {"value", res.value}, {"cutoff", res.cutoff}, {"tail_bound", res.tail_bound}});
            return kOk;
        };
    });

    auto* fey = cmd->add_subcommand("feynman", "Monte Carlo estimate of the integral of Psi_G^(-D/2) over the simplex");
    fey->add_option("graph", source, "graph JSON file, inline JSON or builtin:NAME")->required();
    fey->add_option("--D", D, "spacetime dimension");
    fey->add_option("--samples", samples, "number of samples")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 34));
    fey->add_option("--seed", seed, "master seed (echoed in the output)");
    fey->add_option("--derivative-step", h, "estimate dJ/dD by a central difference with this step instead");
    fey->callback([&r] {
        r.run = [] {
            const auto g = io::load_graph(source);
            const auto e = h > 0 ? periods::feynman_J_derivative(g, D, h, samples, seed) : periods::feynman_J(g, D, samples, seed);
            auto j = io::to_json(e);
            j["D"] = D;
            if (h > 0) j["derivative_step"] = h;
            emit(j);
            return kOk;
        };
    });

    auto* pre = cmd->add_subcommand("prefactor", "pi^(b1 D/2) Gamma(|E| - b1 D/2) / Gamma(|E|)");
    pre->add_option("graph", source, "graph JSON file, inline JSON or builtin:NAME")->required();
    pre->add_option("--D", D, "spacetime dimension");
    pre->callback([&r] {
        r.run = [] {
            const auto g = io::load_graph(source);
            emit(Json{{"D", D}, {"prefactor", periods::i_gamma_prefactor(g, D)}});
            return kOk;
        };
    });
}

void add_verify(CLI::App& app, Runner& r) {
    static std::string suite = "quick";
    auto* cmd = app.add_subcommand("verify", "Run the acceptance suite and print a JSON pass/fail report per criterion");
    cmd->add_option("suite", suite, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    cmd->callback([&r] {
        r.run = [] {
            const auto report = acceptance::run_acceptance(acceptance::parse_suite(suite), [](const auto& c) {
                std::cerr << (c.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << "\n";
            });
            emit_raw(report.to_json());
            return verdict_status(report.all_pass());
        };
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical checks of motivic zeta functions, graph hypersurfaces and periods.\n"
                 "Exit status: 0 success, 1 usage or schema error, 2 a mathematical check failed.\n"
                 "MOTZETA_BUDGET caps enumeration sizes."};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-o,--output", output_path, "write the result to this file instead of stdout");

    Runner runner;
    add_graph(app, runner);
    add_curve(app, runner);
    add_k0(app, runner);
    add_motzeta(app, runner);
    add_artin(app, runner);
    add_bun(app, runner);
    add_periods(app, runner);
    add_verify(app, runner);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (!runner.run) {
        std::cerr << app.help();
        return kUsage;
    }
    try {
        return runner.run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
