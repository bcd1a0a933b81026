#include "toda/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "toda/connection.hpp"
#include "toda/cs.hpp"
#include "toda/dual_ops.hpp"
#include "toda/hc_series.hpp"
#include "toda/univariate.hpp"

namespace toda {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

CheckRecord record(std::string suite, std::string check, std::string anchor, double measured,
                   double threshold, bool pass, long long millis,
                   std::complex<double> value = {}) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.anchor = std::move(anchor);
    r.value_re = value.real();
    r.value_im = value.imag();
    r.bound = measured;
    r.threshold = threshold;
    r.pass = pass;
    r.millis = millis;
    return r;
}

// ----------------------------------------------------------------------
// randomized regular draws

// min over the W-orbit of min_{0<nu, lvl<=cap} |<nu-2xi,nu>| / lvl^2
double orbit_margin_ratio(const ConeTable& cone, const SpectralPoint<double>& xi, int cap) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : group_enumerate(xi.dim()))
        best = std::min(best, double(spectral_margin_ratio(cone, apply(w, xi), cap)));
    return best;
}

SpectralPoint<double> draw_regular_spectral(Rng& rng, int n, const ConeTable& cone, int cap,
                                            double min_ratio,
                                            const std::vector<std::vector<int>>* extra_shifts) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<std::complex<double>> e(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double u = rng.uniform(-0.4, 0.4);
            const double v =
                0.32 + (n > 1 ? 0.55 * double(j) / double(n - 1) : 0.3) + rng.uniform(0.0, 0.08);
            e[size_t(j)] = {u, v};
        }
        SpectralPoint<double> xi(e);
        // distinct-imaginary margins keep the C_reg constraints away from Z
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            for (int k = j + 1; k < n && ok; ++k)
                if (std::abs(e[size_t(j)].imag() - e[size_t(k)].imag()) < 0.12) ok = false;
        if (!ok) continue;
        if (orbit_margin_ratio(cone, xi, cap) < min_ratio) continue;
        if (extra_shifts) {
            for (const auto& s : *extra_shifts) {
                SpectralPoint<double> shifted = xi;
                for (int j = 0; j < n; ++j) shifted[j] += double(s[size_t(j)]);
                if (orbit_margin_ratio(cone, shifted, cap) < min_ratio) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        return xi;
    }
    throw DomainError("draw_regular_spectral: no regular draw found in 200 attempts");
}

PositionPoint<double> draw_chamber_position(Rng& rng, int n, double min_gap, double spread) {
    std::vector<std::complex<double>> e(static_cast<size_t>(n));
    double x = rng.uniform(min_gap, min_gap + spread);
    for (int j = n - 1; j >= 0; --j) {
        e[size_t(j)] = {x, 0.0};
        x += rng.uniform(min_gap, min_gap + spread);
    }
    return PositionPoint<double>(e);
}

std::vector<std::vector<int>> all_unit_shifts(int n, int ell) {
    std::vector<std::vector<int>> shifts;
    for (unsigned jmask = 0; jmask < (1u << n); ++jmask) {
        const int jsz = int(std::popcount(jmask));
        if (jsz == 0 || jsz > ell) continue;
        std::vector<int> idx;
        for (int j = 0; j < n; ++j)
            if ((jmask >> j) & 1u) idx.push_back(j);
        for (unsigned smask = 0; smask < (1u << jsz); ++smask) {
            std::vector<int> s(size_t(n), 0);
            for (int i = 0; i < jsz; ++i) s[size_t(idx[size_t(i)])] = (smask >> i) & 1u ? -1 : 1;
            shifts.push_back(std::move(s));
        }
    }
    return shifts;
}

// ----------------------------------------------------------------------
// criterion 7

void suite_counts(std::vector<CheckRecord>& out) {
    const std::string anchor = "#{nu>=0 : <nu,rho>=m} = binom(n+m-1,m)";
    for (int n = 1; n <= 4; ++n) {
        const auto t0 = Clock::now();
        ConeTable cone(n, 20);
        double worst = 0;
        bool pass = true;
        for (int m = 0; m <= 20; ++m) {
            const auto& lvl = cone.level(m);
            const double expect = binomial(n + m - 1, m);
            worst = std::max(worst, std::abs(double(lvl.size()) - expect));
            if (double(lvl.size()) != expect) pass = false;
            for (size_t i = 0; i + 1 < lvl.size(); ++i)
                if (!(lvl[i] < lvl[i + 1])) pass = false;  // strict lex order, no duplicates
            for (const auto& nu : lvl)
                if (!is_dominant(nu) || cone_level(nu) != m) pass = false;
        }
        out.push_back(record("counts", "crit7/level-counts-n" + std::to_string(n), anchor, worst,
                             0.0, pass, ms_since(t0)));
    }
}

// ----------------------------------------------------------------------
// criteria 1, 2

void suite_univariate(std::vector<CheckRecord>& out, const VerifyConfig& cfg) {
    const std::complex<double> I(0, 1);
    const std::vector<std::complex<double>> xis = {0.1 * I, 0.3 * I, 0.5 * I, 0.7 * I, 0.9 * I,
                                                   0.2,     0.3,     0.4,     0.45};
    const std::vector<double> xs = {0.5, 1.0, 1.75, 3.0};
    const std::vector<double> gs = {0.0, 0.7, 1.5};

    TruncationPlan plan;
    plan.max_level = 60;
    plan.tol = 1e-8;
    plan.eta = cfg.eta;

    {
        const auto t0 = Clock::now();
        double worst = 0;
        bool pass = true;
        for (int i = 0; i < 20; ++i) {
            const auto xi = xis[size_t(i) % xis.size()];
            const double x = xs[size_t(i) % xs.size()];
            const std::complex<double> g = gs[size_t(i) % gs.size()];
            const auto hc =
                phi_eval(SpectralPoint<double>({xi}), PositionPoint<double>({{x, 0.0}}), g, plan);
            const auto oracle = whittaker_M_phi(xi, std::complex<double>(x, 0), g, cfg.eta);
            const double rel = std::abs(hc.value - oracle) / std::abs(oracle);
            worst = std::max(worst, rel);
            if (!(rel <= 1e-10)) pass = false;
        }
        const auto ms = ms_since(t0);
        out.push_back(record("univariate", "crit1/phi-vs-1f1-grid",
                             "phi(n=1) = e^{xi x} e^{-q/2} 1F1(1/2+g-xi,1-2xi;q), q=e^{-x}",
                             worst, 1e-10, pass, ms));
        out.push_back(record("univariate", "crit1/runtime", "grid runtime budget",
                             double(ms), 1000.0, ms < 1000, ms));
    }
    {
        const auto t0 = Clock::now();
        double worst = 0;
        bool pass = true;
        const double inv_sqrt_pi = 1.0 / std::sqrt(pi_v<double>);
        for (int i = 0; i < 20; ++i) {
            const auto xi = xis[size_t(i) % xis.size()];
            const double x = xs[size_t(i) % xs.size()];
            const auto Phi = whittaker_eval(SpectralPoint<double>({xi}),
                                            PositionPoint<double>({{x, 0.0}}),
                                            std::complex<double>(0, 0), plan);
            const auto K = bessel_K_quad(xi, std::complex<double>(std::exp(-x) / 2, 0));
            const std::complex<double> ref = inv_sqrt_pi * K;
            const double rel = std::abs(Phi.value - ref) / std::abs(ref);
            worst = std::max(worst, rel);
            if (!(rel <= 1e-8)) pass = false;
        }
        out.push_back(record("univariate", "crit2/Phi-vs-besselK-grid",
                             "Phi(n=1,g=0) = K_xi(e^{-x}/2)/sqrt(pi)", worst, 1e-8, pass,
                             ms_since(t0)));
    }
}

// ----------------------------------------------------------------------
// criteria 3, 8, 11

void suite_pde(std::vector<CheckRecord>& out, const VerifyConfig& cfg) {
    Rng rng(cfg.seed);
    // criterion 3: eigenvalue residual at M = 30
    const auto t_pde = Clock::now();
    for (int n = 2; n <= 3; ++n) {
        if (cfg.n && n != cfg.n) continue;
        auto plan = TruncationPlan::uncertified(30, cfg.eta);
        auto cone = std::make_shared<const ConeTable>(n, plan.max_level + plan.probe_levels);
        for (int draw = 0; draw < 10; ++draw) {
            const auto t0 = Clock::now();
            const auto xi = draw_regular_spectral(rng, n, *cone, 50, 2e-3, nullptr);
            const auto x = draw_chamber_position(rng, n, 1.0, 0.8);
            const std::complex<double> g(rng.uniform(0.2, 1.2), 0);
            HcCoefficients<double> table(cone, xi, g, plan.max_level, plan.eta);
            const double res = toda_laplacian_residual(table, x, plan);
            out.push_back(record("pde",
                                 "crit3/laplacian-residual-n" + std::to_string(n) + "-draw" +
                                     std::to_string(draw),
                                 "L_x phi = <xi,xi> phi", res, 1e-8, res <= 1e-8, ms_since(t0)));
        }
    }
    {
        const auto ms = ms_since(t_pde);
        out.push_back(record("pde", "crit3/runtime", "residual suite runtime budget", double(ms),
                             30000.0, ms < 30000, ms));
    }

    // criterion 8: coefficient growth |a_nu| <= A^m / m! at M = 35
    for (int n = 1; n <= 3; ++n) {
        if (cfg.n && n != cfg.n) continue;
        const auto t0 = Clock::now();
        const int M = 35;
        auto cone = std::make_shared<const ConeTable>(n, M + 20);
        double worst = 0;
        bool pass = true;
        for (int draw = 0; draw < 3; ++draw) {
            const auto xi = draw_regular_spectral(rng, n, *cone, M + 20, 2e-3, nullptr);
            const std::complex<double> g(0.9, 0);
            HcCoefficients<double> table(cone, xi, g, M, cfg.eta);
            const double a =
                std::max(double(spectral_margin_ratio(*cone, xi, M + 20)), cfg.eta);
            const double c = RootData::make(n).toda_weight_bound(g);
            const double A = 1.0 + c * n / a;
            double bound_m = 1.0;  // A^m / m!
            for (int m = 1; m <= M; ++m) {
                bound_m *= A / double(m);
                for (size_t idx = cone->level_offset(m); idx < cone->level_offset(m + 1); ++idx) {
                    const double ratio = std::abs(table.coeff_at(idx)) / bound_m;
                    worst = std::max(worst, ratio);
                    if (!(ratio <= 1.0)) pass = false;
                }
            }
        }
        out.push_back(record("pde", "crit8/coefficient-growth-n" + std::to_string(n),
                             "|a_nu| <= A^m/m!, A = 1 + c n/a", worst, 1.0, pass, ms_since(t0)));
    }

    // criterion 11: W-invariance and plane-wave asymptotics at n = 2
    {
        const auto t0 = Clock::now();
        const SpectralPoint<double> xi({{0.33, 0.41}, {-0.17, 0.68}});
        const PositionPoint<double> x({{1.7, 0.0}, {0.6, 0.0}});
        const std::complex<double> g(0.75, 0);
        auto plan = TruncationPlan::uncertified(30, cfg.eta);
        auto cone = std::make_shared<const ConeTable>(2, plan.max_level + plan.probe_levels);
        const auto base = whittaker_eval(cone, xi, x, g, plan);
        double worst = 0;
        for (const auto& w : group_enumerate(2)) {
            const auto moved = whittaker_eval(cone, apply(w, xi), x, g, plan);
            worst = std::max(worst, std::abs(moved.value - base.value) / std::abs(base.value));
        }
        auto rec = record("pde", "crit11/W-invariance-n2", "Phi_{w xi} = Phi_xi", worst, 1e-12,
                          worst <= 1e-12, ms_since(t0),
                          {base.value.real(), base.value.imag()});
        rec.kappa = base.kappa;
        out.push_back(rec);
    }
    {
        const auto t0 = Clock::now();
        const SpectralPoint<double> xi({{0.0, 0.3}, {0.0, 0.7}});
        const PositionPoint<double> x({{30.0, 0.0}, {15.0, 0.0}});
        const std::complex<double> g(1.0, 0);
        auto plan = TruncationPlan::uncertified(20, cfg.eta);
        const auto pe = phi_eval(xi, x, g, plan);
        const double dev = std::abs(pe.value - std::exp(dot(xi, x)));
        out.push_back(record("pde", "crit11/plane-wave-n2",
                             "phi -> e^{<xi,x>} as the gaps grow (Re xi = 0)", dev, 1e-6,
                             dev <= 1e-6, ms_since(t0)));
    }
}

// ----------------------------------------------------------------------
// criteria 4, 5

void suite_dde(std::vector<CheckRecord>& out, const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 1);
    const auto t_n3 = Clock::now();
    for (int n = 2; n <= 3; ++n) {
        if (cfg.n && n != cfg.n) continue;
        auto plan = TruncationPlan::uncertified(30, cfg.eta);
        auto cone = std::make_shared<const ConeTable>(n, plan.max_level + plan.probe_levels);
        const auto shifts = all_unit_shifts(n, n);
        for (int draw = 0; draw < 5; ++draw) {
            const auto xi = draw_regular_spectral(rng, n, *cone, 50, 2e-3, &shifts);
            const auto x = draw_chamber_position(rng, n, 0.7, 0.9);
            const std::complex<double> g(rng.uniform(0.2, 1.2), 0);
            for (int ell = 1; ell <= n; ++ell) {
                const auto t0 = Clock::now();
                const auto res = dde_residual(ell, xi, x, g, plan, cone);
                auto rec = record("dde",
                                  "crit4/dde-residual-n" + std::to_string(n) + "-l" +
                                      std::to_string(ell) + "-draw" + std::to_string(draw),
                                  "D_l Phi = e^{x_1+...+x_l} Phi", res.residual, 1e-8,
                                  res.residual <= 1e-8, ms_since(t0));
                rec.kappa = res.condition;
                out.push_back(rec);
            }
        }
    }
    {
        const auto ms = ms_since(t_n3);
        out.push_back(record("dde", "crit4/runtime", "difference-equation suite runtime budget",
                             double(ms), 300000.0, ms < 300000, ms));
    }

    // criterion 5: U_{{1..n},1} + sum_{j,eps} V_{eps j} = 0
    for (int n = 2; n <= 3; ++n) {
        if (cfg.n && n != cfg.n) continue;
        const auto t0 = Clock::now();
        ConeTable scan_cone(n, 12);
        double worst = 0;
        bool pass = true;
        for (int draw = 0; draw < 25; ++draw) {
            const auto xi = draw_regular_spectral(rng, n, scan_cone, 8, 1e-3, nullptr);
            const std::complex<double> g(rng.uniform(0.0, 1.5), rng.uniform(-0.3, 0.3));
            std::vector<int> full(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) full[size_t(j)] = j;
            std::complex<double> total = coeff_U(full, 1, xi, g, cfg.eta);
            double scale = std::abs(total);
            for (int j = 0; j < n; ++j)
                for (int s : {1, -1}) {
                    SignedSubset eJ;
                    eJ.indices = {j};
                    eJ.signs = {s};
                    const auto v = coeff_V(eJ, xi, g, cfg.eta);
                    total += v;
                    scale += std::abs(v);
                }
            const double defect = std::abs(total) / scale;
            worst = std::max(worst, defect);
            if (!(defect <= 1e-12)) pass = false;
        }
        out.push_back(record("dde", "crit5/sum-rule-n" + std::to_string(n),
                             "U_{{1..n},1} + sum_{j,eps} V_{eps j} = 0", worst, 1e-12, pass,
                             ms_since(t0)));
    }
}

// ----------------------------------------------------------------------
// criterion 6 (extended precision)

void suite_residues(std::vector<CheckRecord>& out, const VerifyConfig& cfg) {
    using LD = long double;
    const auto t_all = Clock::now();
    auto plan = TruncationPlan::uncertified(35, cfg.eta);
    auto cone = std::make_shared<const ConeTable>(2, plan.max_level + plan.probe_levels);
    const Cplx<LD> g(0.8L, 0.0L);
    const PositionPoint<LD> x({{2.0L, 0.0L}, {1.0L, 0.0L}});
    const std::vector<LD> deltas = {0.01L, 0.005L, 0.0025L};

    SpectralFn<LD> Phi = [&](const SpectralPoint<LD>& p) {
        return whittaker_eval(cone, p, x, g, plan).value;
    };

    for (int m = 1; m <= 3; ++m) {
        for (int fam = 0; fam < 2; ++fam) {
            const auto t0 = Clock::now();
            const bool single = fam == 0;
            const auto family =
                single ? HyperplaneFamily::SingleTwoXi1 : HyperplaneFamily::PairXi1PlusXi2;
            SpectralPoint<LD> xi_hat =
                single ? SpectralPoint<LD>({{LD(m) / 2.0L, 0.0L}, {0.36L, 0.77L}})
                       : SpectralPoint<LD>({{LD(m) / 2.0L + 0.21L, 0.64L},
                                            {LD(m) / 2.0L - 0.21L, -0.64L}});
            const auto probe = residue_probe<LD>(family, m, xi_hat, Phi, deltas);
            const std::string tag = (single ? "single" : "pair") + std::string("-m") +
                                    std::to_string(m);
            const std::string anchor = single ? "Res Phi on 2xi_1 = m vanishes (m > 0)"
                                              : "Res Phi on xi_1+xi_2 = m vanishes (m > 0)";
            const double rel =
                double(std::abs(probe.extrapolated) / probe.reference_magnitude);
            out.push_back(record("residues", "crit6/" + tag + "-residue", anchor, rel, 1e-6,
                                 rel <= 1e-6, ms_since(t0),
                                 {double(probe.extrapolated.real()),
                                  double(probe.extrapolated.imag())}));
            const double slope_err = std::abs(double(probe.slope) - 1.0);
            out.push_back(record("residues", "crit6/" + tag + "-slope",
                                 "|r(delta)| = O(delta): fitted slope near 1", slope_err, 0.2,
                                 slope_err <= 0.2, 0, {double(probe.slope), 0.0}));
        }
    }
    {
        const auto ms = ms_since(t_all);
        out.push_back(record("residues", "crit6/runtime", "residue suite runtime budget",
                             double(ms), 120000.0, ms < 120000, ms));
    }
}

// ----------------------------------------------------------------------
// criteria 9, 10

void suite_confluence(std::vector<CheckRecord>& out, const VerifyConfig& cfg) {
    const auto t_all = Clock::now();
    // criterion 9: series and connection-formula confluence, n = 1 and 2
    for (int n = 1; n <= 2; ++n) {
        if (cfg.n && n != cfg.n) continue;
        const auto t0 = Clock::now();
        const SpectralPoint<double> xi =
            n == 1 ? SpectralPoint<double>({{0.0, 0.3}})
                   : SpectralPoint<double>({{0.31, 0.40}, {-0.18, 0.67}});
        const PositionPoint<double> x = n == 1 ? PositionPoint<double>({{1.0, 0.0}})
                                               : PositionPoint<double>({{2.0, 0.0}, {0.9, 0.0}});
        const std::complex<double> g(1.0, 0);
        auto plan = TruncationPlan::uncertified(25, cfg.eta);
        const auto samples = confluence_error(xi, x, g, {4.0, 6.0, 8.0}, plan);
        double worst_ratio_phi = 0, worst_ratio_Phi = 0;
        for (size_t i = 0; i + 1 < samples.size(); ++i) {
            worst_ratio_phi = std::max(worst_ratio_phi, samples[i + 1].err_phi / samples[i].err_phi);
            worst_ratio_Phi = std::max(worst_ratio_Phi, samples[i + 1].err_Phi / samples[i].err_Phi);
        }
        bool flagged = false;
        for (const auto& s : samples) flagged = flagged || s.precision_flag;
        auto rec1 = record("confluence", "crit9/phi-confluence-n" + std::to_string(n),
                           "e^{-c<xi,rho>} phi^cs(x+c rho; k^{(c)}) -> phi(x;g)",
                           worst_ratio_phi, 1.0, worst_ratio_phi < 1.0, ms_since(t0));
        rec1.flagged = flagged;
        out.push_back(rec1);
        out.push_back(record("confluence", "crit9/Phi-confluence-n" + std::to_string(n),
                             "gamma(k^{(c)}) Phi^cs(x+c rho; k^{(c)}) -> Phi(x;g)",
                             worst_ratio_Phi, 1.0, worst_ratio_Phi < 1.0, ms_since(t0)));
    }
    // criterion 9: c-function limit at n = 2
    if (!cfg.n || cfg.n == 2) {
        const auto t0 = Clock::now();
        const SpectralPoint<double> xi({{0.31, 0.40}, {-0.18, 0.67}});
        const std::complex<double> g(1.0, 0);
        const auto C_ref = c_function(xi, g, cfg.eta).value;
        std::vector<int> rho = {2, 1};
        double prev = std::numeric_limits<double>::infinity();
        double worst_ratio = 0;
        for (double c : {4.0, 6.0, 8.0, 10.0}) {
            const auto k = coupling_schedule(c, g);
            const auto lim = std::exp(gamma_factor(2, k, cfg.eta).log_value +
                                      c * (xi[0] * 2.0 + xi[1] * 1.0) +
                                      cs_c_function(xi, k, cfg.eta).log_value);
            const double err = std::abs(lim - C_ref);
            if (std::isfinite(prev)) worst_ratio = std::max(worst_ratio, err / prev);
            prev = err;
        }
        out.push_back(record("confluence", "crit9/c-function-limit-n2",
                             "gamma(k^{(c)}) e^{c<xi,rho>} C^cs(xi;k^{(c)}) -> C(xi;g)",
                             worst_ratio, 1.0, worst_ratio < 1.0, ms_since(t0)));
    }

    // criterion 10: scaled coefficient limits, error shrinking >= 10x from c=6 to c=10
    {
        const auto t0 = Clock::now();
        Rng rng(cfg.seed + 2);
        ConeTable scan_cone(1, 12);
        const auto xi = draw_regular_spectral(rng, 1, scan_cone, 8, 1e-3, nullptr);
        const std::complex<double> g(0.6, 0);
        const PositionPoint<double> x({{1.3, 0.0}});
        SignedSubset eJ;
        eJ.indices = {0};
        eJ.signs = {1};
        const std::vector<int> K = {0};
        const auto ref_V = coeff_V(eJ, xi, g, cfg.eta);
        const auto ref_U = coeff_U(K, 1, xi, g, cfg.eta);
        const double ref_E = std::exp(x[0].real());
        double err6[3]{}, err10[3]{};
        for (double c : {6.0, 10.0}) {
            const auto k = coupling_schedule(c, g);
            const double scale = std::exp(-c);
            double* err = c == 6.0 ? err6 : err10;
            err[0] = std::abs(cs_coeff_V(eJ, xi, k, cfg.eta, scale) - ref_V);
            err[1] = std::abs(cs_coeff_U(K, 1, xi, k, cfg.eta, scale) - ref_U);
            err[2] = std::abs(E_ell_translated_scaled(1, x, c) - ref_E);
        }
        const char* names[3] = {"V-limit", "U-limit", "E-limit"};
        const char* anchors[3] = {"e^{-(c/2)|J|(2n+1-|J|)} V^cs -> V",
                                  "e^{-(c/2)p(2|K|+1-p)} U^cs -> U",
                                  "e^{-(c/2)l(2n+1-l)} E_l(x+c rho) -> e^{x_1+...+x_l}"};
        for (int i = 0; i < 3; ++i) {
            const double ratio = err6[i] / err10[i];
            out.push_back(record("confluence", std::string("crit10/") + names[i], anchors[i],
                                 ratio, 10.0, ratio >= 10.0, ms_since(t0)));
        }
    }
    {
        const auto ms = ms_since(t_all);
        out.push_back(record("confluence", "crit9/runtime", "confluence suite runtime budget",
                             double(ms), 300000.0, ms < 300000, ms));
    }
}

}  // namespace

std::vector<CheckRecord> verify_counts(const VerifyConfig&) {
    std::vector<CheckRecord> out;
    suite_counts(out);
    return out;
}
std::vector<CheckRecord> verify_univariate(const VerifyConfig& cfg) {
    std::vector<CheckRecord> out;
    suite_univariate(out, cfg);
    return out;
}
std::vector<CheckRecord> verify_pde(const VerifyConfig& cfg) {
    std::vector<CheckRecord> out;
    suite_pde(out, cfg);
    return out;
}
std::vector<CheckRecord> verify_dde(const VerifyConfig& cfg) {
    std::vector<CheckRecord> out;
    suite_dde(out, cfg);
    return out;
}
std::vector<CheckRecord> verify_residues(const VerifyConfig& cfg) {
    std::vector<CheckRecord> out;
    suite_residues(out, cfg);
    return out;
}
std::vector<CheckRecord> verify_confluence(const VerifyConfig& cfg) {
    std::vector<CheckRecord> out;
    suite_confluence(out, cfg);
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"counts",   "univariate", "pde",
                                                   "dde",      "residues",   "confluence"};
    return names;
}

std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg) {
    if (suite == "counts") return verify_counts(cfg);
    if (suite == "univariate") return verify_univariate(cfg);
    if (suite == "pde") return verify_pde(cfg);
    if (suite == "dde") return verify_dde(cfg);
    if (suite == "residues") return verify_residues(cfg);
    if (suite == "confluence") return verify_confluence(cfg);
    if (suite == "all") {
        std::vector<CheckRecord> out;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace toda
