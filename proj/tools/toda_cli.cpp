// Command-line verification harness.
//
//   toda_whittaker eval <phi|Phi|cs-phi|cs-Phi|M|W|K> [flags]
//   toda_whittaker verify <pde|dde|univariate|residues|confluence|counts|all> [flags]
//
// One JSON record per line on stdout, human summary on stderr, --csv for
// tabular output.  Exit codes: 0 pass, 1 verify-check failure, 2 usage or
// domain error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "toda/connection.hpp"
#include "toda/cs.hpp"
#include "toda/errors.hpp"
#include "toda/parse.hpp"
#include "toda/report.hpp"
#include "toda/univariate.hpp"
#include "toda/verify.hpp"

namespace {

using toda::CheckRecord;

struct Options {
    int n = 1;
    std::string g = "0";
    int precision = 53;
    int M = 30;
    double tol = 1e-8;
    double eta = 1e-9;
    unsigned long long seed = 7;
    bool csv = false;
    std::string config;
    std::string xi, x, z = "1", c = "0";
    std::string k0, k1, k2;
    std::string m_range = "1..3";
};

void emit(const CheckRecord& rec, bool csv, bool& header_done) {
    if (csv) {
        if (!header_done) {
            std::cout << toda::csv_header() << "\n";
            header_done = true;
        }
        std::cout << toda::to_csv_line(rec) << "\n";
    } else {
        std::cout << toda::to_json_line(rec) << "\n";
    }
    std::cerr << (rec.pass ? "ok   " : "FAIL ") << rec.suite << "/" << rec.check << "  measured "
              << rec.bound << " vs " << rec.threshold << "\n";
}

// Config file preloads any flag; explicit flags override (CLI11 only writes
// bound variables when the flag is present).
void preload_config(Options& o, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw toda::DomainError("config file not readable: " + path);
    nlohmann::json j;
    in >> j;
    auto get = [&j](const char* key, auto& into) {
        if (j.contains(key)) into = j[key].template get<std::decay_t<decltype(into)>>();
    };
    get("n", o.n);
    get("g", o.g);
    get("precision", o.precision);
    get("M", o.M);
    get("tol", o.tol);
    get("eta", o.eta);
    get("seed", o.seed);
    get("csv", o.csv);
    get("xi", o.xi);
    get("x", o.x);
    get("z", o.z);
    get("c", o.c);
    get("k0", o.k0);
    get("k1", o.k1);
    get("k2", o.k2);
    get("m", o.m_range);
}

template <class R>
toda::SpectralPoint<R> to_spectral(const std::string& text, int n) {
    const auto list = toda::parse_complex_list(text);
    if (int(list.size()) != n)
        throw toda::DomainError("--xi needs " + std::to_string(n) + " comma-separated entries");
    std::vector<toda::Cplx<R>> e;
    for (auto& v : list) e.emplace_back(R(v.real()), R(v.imag()));
    return toda::SpectralPoint<R>(e);
}

template <class R>
toda::PositionPoint<R> to_position(const std::string& text, int n) {
    const auto list = toda::parse_complex_list(text);
    if (int(list.size()) != n)
        throw toda::DomainError("--x needs " + std::to_string(n) + " comma-separated entries");
    std::vector<toda::Cplx<R>> e;
    for (auto& v : list) e.emplace_back(R(v.real()), R(v.imag()));
    return toda::PositionPoint<R>(e);
}

template <class R>
toda::Cplx<R> to_scalar(const std::string& text) {
    const auto v = toda::parse_complex(text);
    return toda::Cplx<R>(R(v.real()), R(v.imag()));
}

template <class R>
CheckRecord run_eval(const std::string& target, const Options& o) {
    using namespace toda;
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.suite = "eval";
    rec.check = target;
    rec.threshold = o.tol;
    rec.pass = true;

    TruncationPlan plan{o.M, o.tol, o.eta, 20};
    const Cplx<R> g = to_scalar<R>(o.g);

    if (target == "phi" || target == "Phi") {
        const auto xi = to_spectral<R>(o.xi, o.n);
        const auto x = to_position<R>(o.x, o.n);
        if (target == "phi") {
            const auto r = phi_eval(xi, x, g, plan);
            rec.anchor = "phi_xi(x;g), series with certified tail bound";
            rec.value_re = double(r.value.real());
            rec.value_im = double(r.value.imag());
            rec.bound = double(r.tail_bound);
        } else {
            const auto r = whittaker_eval(xi, x, g, plan);
            rec.anchor = "Phi_xi = sum_w C(w xi) phi_{w xi}";
            rec.value_re = double(r.value.real());
            rec.value_im = double(r.value.imag());
            rec.bound = double(r.tail_bound);
            rec.kappa = double(r.kappa);
            rec.flagged = double(r.kappa) * std::numeric_limits<double>::epsilon() > o.tol;
        }
        rec.pass = rec.bound <= o.tol;
    } else if (target == "cs-phi" || target == "cs-Phi") {
        const auto xi = to_spectral<R>(o.xi, o.n);
        const auto x = to_position<R>(o.x, o.n);
        CouplingTriple<R> k;
        if (!o.k0.empty() || !o.k1.empty() || !o.k2.empty()) {
            if (o.k0.empty() || o.k1.empty() || o.k2.empty())
                throw DomainError("provide all of --k0 --k1 --k2, or --c with --g");
            k.k0 = to_scalar<R>(o.k0);
            k.k1 = to_scalar<R>(o.k1);
            k.k2 = to_scalar<R>(o.k2);
        } else {
            k = coupling_schedule(R(std::stod(o.c)), g);
        }
        if (target == "cs-phi") {
            const auto r = cs_phi_eval(xi, x, k, plan);
            rec.anchor = "phi^cs_xi(x;k), series with empirical tail estimate";
            rec.value_re = double(r.value.real());
            rec.value_im = double(r.value.imag());
            rec.bound = double(r.tail_estimate);
        } else {
            auto cone = std::make_shared<const ConeTable>(o.n, plan.max_level);
            const auto r = cs_whittaker_eval(cone, xi, x, k, plan);
            rec.anchor = "Phi^cs_xi = sum_w C^cs(w xi) phi^cs_{w xi}";
            rec.value_re = double(r.value.real());
            rec.value_im = double(r.value.imag());
            rec.bound = double(r.tail_bound);
            rec.kappa = double(r.kappa);
        }
    } else if (target == "M" || target == "W" || target == "K") {
        const Cplx<R> xi = to_scalar<R>(o.xi.empty() ? "0.3" : o.xi);
        if (target == "K") {
            const Cplx<R> z = to_scalar<R>(o.z);
            const auto v = bessel_K_quad(xi, z);
            rec.anchor = "K_nu(z) = int_0^inf e^{-z cosh t} cosh(nu t) dt";
            rec.value_re = double(v.real());
            rec.value_im = double(v.imag());
        } else {
            const Cplx<R> x = to_scalar<R>(o.x.empty() ? "1" : o.x);
            const auto v = target == "M" ? whittaker_M_phi(xi, x, g, o.eta)
                                         : whittaker_W_Phi(xi, x, g, o.eta);
            rec.anchor = target == "M" ? "phi = e^{xi x} e^{-q/2} 1F1(1/2+g-xi,1-2xi;q)"
                                       : "Phi = c_+ phi_xi + c_- phi_{-xi}";
            rec.value_re = double(v.real());
            rec.value_im = double(v.imag());
        }
    } else {
        throw DomainError("unknown eval target '" + target + "'");
    }
    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rec;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    // pre-scan for --config so its values act as defaults
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") o.config = argv[i + 1];
    try {
        if (!o.config.empty()) preload_config(o, o.config);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Whittaker functions of the Toda chain with Morse boundary term"};
    app.add_option("--n", o.n, "dimension");
    app.add_option("--g", o.g, "coupling g (complex, a+bi)");
    app.add_option("--precision", o.precision, "mantissa bits: 53 = double, >53 = extended");
    app.add_option("--M", o.M, "truncation level");
    app.add_option("--tol", o.tol, "target tail tolerance");
    app.add_option("--eta", o.eta, "exclusion distance from singular lattices");
    app.add_option("--seed", o.seed, "seed for randomized draws");
    app.add_option("--config", o.config, "JSON config preloading any flag");
    app.add_flag("--csv", o.csv, "CSV output instead of JSON lines");

    std::string eval_target, verify_suite;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function");
    eval_cmd->add_option("target", eval_target, "phi|Phi|cs-phi|cs-Phi|M|W|K")->required();
    eval_cmd->add_option("--xi", o.xi, "spectral point (comma-separated complex)");
    eval_cmd->add_option("--x", o.x, "position point (comma-separated complex)");
    eval_cmd->add_option("--z", o.z, "argument of K");
    eval_cmd->add_option("--c", o.c, "coupling-schedule parameter for cs targets");
    eval_cmd->add_option("--k0", o.k0, "coupling k0 (overrides --c)");
    eval_cmd->add_option("--k1", o.k1, "coupling k1");
    eval_cmd->add_option("--k2", o.k2, "coupling k2");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", verify_suite, "pde|dde|univariate|residues|confluence|counts|all")
        ->required();
    verify_cmd->add_option("--m", o.m_range, "hyperplane index range for residues (lo..hi)");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (const char* env = std::getenv("TODA_WHITTAKER_PRECISION")) o.precision = std::atoi(env);
    if (o.precision < 53) {
        std::cerr << "precision must be >= 53 bits\n";
        return 2;
    }
    if (!(o.tol > 0) || !(o.eta > 0) || o.eta >= o.tol) {
        std::cerr << "require 0 < eta < tol\n";
        return 2;
    }

    bool header_done = false;
    try {
        if (eval_cmd->parsed()) {
            const CheckRecord rec = o.precision > 53 ? run_eval<long double>(eval_target, o)
                                                     : run_eval<double>(eval_target, o);
            emit(rec, o.csv, header_done);
            return 0;
        }
        toda::VerifyConfig cfg;
        cfg.seed = o.seed;
        cfg.eta = o.eta;
        const auto records = toda::run_suite(verify_suite, cfg);
        bool all_pass = true;
        for (const auto& rec : records) {
            emit(rec, o.csv, header_done);
            all_pass = all_pass && rec.pass;
        }
        std::cerr << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
        return all_pass ? 0 : 1;
    } catch (const toda::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
