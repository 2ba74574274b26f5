// etaforge: expansion, cusp-order tables, verification suites and
// eta-quotient decomposition on the command line.
#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "etaforge/decompose.hpp"
#include "etaforge/eisenstein.hpp"
#include "etaforge/serialize.hpp"
#include "etaforge/verify.hpp"

using namespace etaforge;

namespace {

// exit codes (also in --help)
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;   // verification failed / not certified
constexpr int kBadArgument = 2;   // bad descriptor or flag combination
constexpr int kIoError = 3;       // unreadable or unparsable input file
constexpr int kPrecondition = 4;  // domain precondition violated

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

long default_precision() {
    if (const char* env = std::getenv("ETAFORGE_PREC_DEFAULT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 120;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void print_series(const QSeries& f, long prec, bool as_json) {
    if (as_json) {
        std::cout << to_json(f).dump(2) << "\n";
        return;
    }
    std::cout << "leading exponent: " << rat_to_string(f.leading_exponent()) << "\n";
    std::cout << "zeta order: " << f.zeta_order() << "\n";
    std::cout << f.to_string(prec) << "\n";
}

int cmd_expand(const std::string& object, const std::string& char_spec,
               const std::string& psi_spec, const std::string& phi_spec, long t,
               const std::string& file, long prec, bool as_json) {
    QSeries f;
    if (object == "eta") {
        f = eta_series(prec);
    } else if (object == "eta-chi") {
        f = eta_chi_series(char_from_spec(char_spec), prec);
    } else if (object == "e2") {
        f = e2_series(char_from_spec(psi_spec), char_from_spec(phi_spec), prec).series;
    } else if (object == "e2t") {
        f = e2t_series(t, prec);
    } else if (object == "quotient") {
        if (file.empty()) throw std::invalid_argument("expand quotient needs --file");
        f = expand_quotient(quotient_from_json(read_json_file(file)), prec);
    } else {
        throw std::invalid_argument("unknown object '" + object +
                                    "' (eta | eta-chi | e2 | e2t | quotient)");
    }
    print_series(f, prec, as_json);
    return kOk;
}

int cmd_orders(const std::string& char_spec, bool as_json) {
    DirChar chi = char_from_spec(char_spec);
    if (!chi.is_real())
        throw std::invalid_argument(
            "orders requires a real character: the closed-form order table is only "
            "defined for real chi; got order-" +
            std::to_string(chi.order()) + " character " + chi.descriptor());
    if (!chi.is_primitive() || chi.conductor() <= 2)
        throw std::invalid_argument("orders requires a primitive character of conductor > 2");
    const long u = chi.conductor();
    const long n = u * u;
    const long q = eta_chi_level(chi);
    auto cusps = enumerate_cusps(n);
    if (as_json) {
        json out;
        out["char"] = chi.descriptor();
        out["group_level"] = n;
        out["eta_chi_level"] = q;
        out["cusps"] = json::array();
        for (const auto& s : cusps)
            out["cusps"].push_back({{"cusp", s.to_string()},
                                    {"width", cusp_width(s)},
                                    {"order", eta_chi_cusp_order(chi, s)}});
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "character " << chi.descriptor() << " on Gamma_0(" << n << "), Q = " << q
              << "\n";
    std::printf("%-10s %6s %8s\n", "cusp", "width", "order");
    for (const auto& s : cusps)
        std::printf("%-10s %6ld %8ld\n", s.to_string().c_str(), cusp_width(s),
                    eta_chi_cusp_order(chi, s));
    return kOk;
}

int cmd_decompose(long level, long weight, const std::string& series_file,
                  const std::string& quotient_file, bool as_json) {
    if (series_file.empty() == quotient_file.empty())
        throw std::invalid_argument("decompose needs exactly one of --series / --quotient");
    QSeries f;
    if (!series_file.empty()) {
        f = qseries_from_json(read_json_file(series_file));
    } else {
        EtaQuotientExpr e = quotient_from_json(read_json_file(quotient_file));
        f = expand_quotient(e, sturm_bound(level) + 12);
    }
    DecompositionResult res = decompose({level, weight, f});
    LevelClass cls = supported_level(level);
    if (as_json) {
        json out;
        out["level"] = level;
        out["weight"] = weight;
        out["level_class"] = level_class_name(cls);
        out["guaranteed"] = decomposition_guaranteed(cls);
        out["certified"] = res.certified;
        out["full_rank"] = res.full_rank;
        out["residual_zero"] = res.residual.is_zero();
        out["expr"] = to_json(res.expr);
        out["raw_expr"] = to_json(res.raw_expr);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "level " << level << " (" << level_class_name(cls) << "), weight "
                  << weight << "\n";
        std::cout << "result: " << res.expr.to_string() << "\n";
        std::cout << "residual " << (res.residual.is_zero() ? "zero" : "NONZERO")
                  << ", basis " << (res.full_rank ? "full rank" : "RANK DEFICIENT") << "\n";
        std::cout << (res.certified ? "certified" : "NOT certified") << "\n";
    }
    return res.certified ? kOk : kCheckFailed;
}

int cmd_verify(const std::string& suite, bool as_json) {
    verify::SuiteResult r = verify::run_suite(suite);
    if (as_json) {
        json out;
        out["suite"] = r.suite;
        out["pass"] = r.pass();
        out["checks"] = json::array();
        for (const auto& c : r.checks)
            out["checks"].push_back({{"name", c.name},
                                     {"pass", c.pass},
                                     {"observed", c.observed},
                                     {"expected", c.expected},
                                     {"deviation", fmt17(c.deviation)}});
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : r.checks) {
            std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name << ": observed "
                      << c.observed << ", expected " << c.expected;
            if (c.deviation != 0.0) std::cout << ", deviation " << fmt17(c.deviation);
            std::cout << "\n";
        }
        std::cout << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
                  << r.checks.size() << " checks)\n";
    }
    return r.pass() ? kOk : kCheckFailed;
}

int cmd_multiplier(const std::string& char_spec, std::vector<long> g, double tau_re,
                   double tau_im, bool tau_given, long truncation, bool as_json) {
    DirChar chi = char_from_spec(char_spec);
    UnimodularMatrix gamma{g[0], g[1], g[2], g[3]};
    if (!gamma.check()) throw std::invalid_argument("gamma must have determinant 1");
    std::complex<double> tau;
    if (tau_given) {
        tau = {tau_re, tau_im};
    } else if (gamma.c == 0) {
        tau = {0.0, 0.3};
    } else {
        // near the fixed data of gamma, away from both cusps
        tau = {-(double)gamma.d / gamma.c, 1.0 / std::abs((double)gamma.c)};
        std::complex<double> img = gamma.apply(tau);
        if (std::abs(img - tau) < 1e-9) tau = {tau.real(), 0.75 / std::abs((double)gamma.c)};
    }
    QSeries f = eta_chi_series(chi, truncation);
    std::complex<double> nu = estimate_multiplier(f, gamma, tau, truncation);
    std::complex<double> nu12 = std::pow(nu, 12);
    double defect = std::abs(nu12 - 1.0);
    if (as_json) {
        json out;
        out["char"] = chi.descriptor();
        out["gamma"] = g;
        out["tau"] = {fmt17(tau.real()), fmt17(tau.imag())};
        out["nu"] = {fmt17(nu.real()), fmt17(nu.imag())};
        out["nu12_defect"] = fmt17(defect);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "nu-hat = " << fmt17(nu.real()) << " + " << fmt17(nu.imag())
                  << "i at tau = " << fmt17(tau.real()) << " + " << fmt17(tau.imag())
                  << "i\n|nu^12 - 1| = " << fmt17(defect) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"etaforge: generalized eta functions, cusp orders and eta-quotient "
                 "decomposition on Gamma_0(N)"};
    app.footer(
        "Exit codes:\n"
        "  0  success (all checks passed / decomposition certified)\n"
        "  1  a verification check failed or the decomposition is not certified\n"
        "  2  bad descriptor, flag combination, matrix or input precondition\n"
        "  3  input file unreadable or unparsable\n"
        "  4  domain precondition violated (precision, |q| bound, ...)\n"
        "Environment: ETAFORGE_PREC_DEFAULT sets the default --prec (120).");
    app.require_subcommand(1);

    long prec = default_precision();
    bool as_json = false;

    // expand
    std::string object, char_spec = "one:1", psi_spec = "one:1", phi_spec = "one:1", file;
    long t = 2;
    auto* expand = app.add_subcommand("expand", "q-expansion of a series object");
    expand->add_option("object", object, "eta | eta-chi | e2 | e2t | quotient")->required();
    expand->add_option("--char", char_spec, "character descriptor (eta-chi)");
    expand->add_option("--psi", psi_spec, "psi descriptor (e2)");
    expand->add_option("--phi", phi_spec, "phi descriptor (e2)");
    expand->add_option("--t", t, "t for E_{2,t} (e2t)");
    expand->add_option("--file", file, "EtaQuotientExpr JSON file (quotient)");
    expand->add_option("--prec", prec, "number of q-expansion coefficients");

    // orders
    std::string orders_char;
    auto* orders = app.add_subcommand("orders", "cusp order table of eta_chi on Gamma_0(u^2)");
    orders->add_option("--char", orders_char, "real primitive character descriptor")
        ->required();

    // decompose
    long level = 0, weight = 0;
    std::string series_file, quotient_file;
    auto* dec = app.add_subcommand("decompose",
                                   "decompose a cuspidal-divisor function into eta factors");
    dec->add_option("--level", level, "Gamma_0 level N")->required();
    dec->add_option("--weight", weight, "weight k of the input (default 0)");
    dec->add_option("--series", series_file, "QSeries JSON input");
    dec->add_option("--quotient", quotient_file, "EtaQuotientExpr JSON input (round trip)");

    // verify
    std::string suite;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "lemma1 | lemma2 | lemma3 | basis | multiplier | valence")
        ->required();

    // multiplier
    std::string mult_char = "kronecker:3";
    std::vector<long> gmat;
    double tau_re = 0.0, tau_im = 0.0;
    long truncation = 500;
    auto* mult = app.add_subcommand("multiplier",
                                    "numeric multiplier of eta_chi under a group element");
    mult->add_option("--char", mult_char, "character descriptor");
    mult->add_option("--gamma", gmat, "matrix entries a b c d, ad - bc = 1")
        ->expected(4)
        ->required();
    auto* tre = mult->add_option("--tau-re", tau_re, "Re tau (default: matrix-dependent)");
    mult->add_option("--tau-im", tau_im, "Im tau")->needs(tre);
    mult->add_option("--truncation", truncation, "series truncation");

    for (auto* sub : {expand, orders, dec, ver, mult})
        sub->add_flag("--json", as_json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*expand)
            return cmd_expand(object, char_spec, psi_spec, phi_spec, t, file, prec, as_json);
        if (*orders) return cmd_orders(orders_char, as_json);
        if (*dec) return cmd_decompose(level, weight, series_file, quotient_file, as_json);
        if (*ver) return cmd_verify(suite, as_json);
        if (*mult)
            return cmd_multiplier(mult_char, gmat, tau_re, tau_im, tre->count() > 0,
                                  truncation, as_json);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgument;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kBadArgument;
}
