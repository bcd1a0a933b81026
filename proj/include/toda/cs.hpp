#pragma once

// Hyperbolic (Calogero-Sutherland type) side and its strong-coupling
// confluence onto the Toda-with-Morse functions.
//
// Series: phi^cs_xi(x;k) = sum_{nu>=0} a^cs_nu e^{<xi-nu,x>} with
//   <nu-2xi,nu> a^cs_nu = sum_{alpha in R+, l>=1} l a^cs_alpha a^cs_{nu-l alpha},
//   a^cs_alpha = k1(k1+2k2-1), 2k0(k0-1), 4k2(k2-1) for <alpha,alpha> = 1,2,4.
//
// Coupling schedule: k0(k0-1) = e^c, k1 = 2g, k2(k2-1) = e^{2c}/16 with
// k0, k2 > 0; together with x -> x + c rho this degenerates the potential
// to the Toda one as c -> +infinity.  Tables built with a translation c
// store the rescaled coefficients a^_nu = e^{-c<nu,rho>} a^cs_nu, whose
// recurrence weights e^{-c l <alpha,rho>} a^cs_alpha stay bounded for all c,
// so the confluence can be evaluated without overflow at any c.

#include <bit>
#include <memory>

#include "toda/connection.hpp"
#include "toda/cone.hpp"
#include "toda/group.hpp"
#include "toda/hc_series.hpp"

namespace toda {

template <class R>
struct CouplingTriple {
    Cplx<R> k0{}, k1{}, k2{};
};

// Positive quadratic roots of k0(k0-1) = e^c and k2(k2-1) = e^{2c}/16.
template <class R>
CouplingTriple<R> coupling_schedule(R c, const Cplx<R>& g) {
    CouplingTriple<R> k;
    k.k0 = Cplx<R>((R(1) + std::sqrt(R(1) + R(4) * std::exp(c))) / R(2), R(0));
    k.k1 = R(2) * g;
    k.k2 = Cplx<R>((R(1) + std::sqrt(R(1) + std::exp(R(2) * c) / R(4))) / R(2), R(0));
    return k;
}

template <class R>
Cplx<R> cs_weight(int alpha_norm, const CouplingTriple<R>& k) {
    switch (alpha_norm) {
        case 1: return k.k1 * (k.k1 + R(2) * k.k2 - R(1));
        case 2: return R(2) * k.k0 * (k.k0 - R(1));
        case 4: return R(4) * k.k2 * (k.k2 - R(1));
        default: throw DomainError("cs_weight: <alpha,alpha> must be 1, 2 or 4");
    }
}

// Rescaled coefficient table.  With translation == 0 this is the plain
// a^cs_nu; with translation c it holds e^{-c<nu,rho>} a^cs_nu(xi; k).
template <class R>
class CsCoefficients {
  public:
    CsCoefficients(std::shared_ptr<const ConeTable> cone, SpectralPoint<R> xi,
                   CouplingTriple<R> k, int max_level, double eta, R translation = R(0))
        : cone_(std::move(cone)), xi_(std::move(xi)), k_(k), max_level_(max_level),
          translation_(translation) {
        if (max_level_ > cone_->max_level() || xi_.dim() != cone_->dim())
            throw DomainError("CsCoefficients: cone table too small or dimension mismatch");
        const RootData roots = RootData::make(cone_->dim());
        const size_t nroots = roots.bc_positive.size();
        std::vector<Cplx<R>> base_weight(nroots);
        std::vector<R> damping(nroots);  // e^{-c <alpha,rho>}
        std::vector<int> alpha_level(nroots);
        for (size_t s = 0; s < nroots; ++s) {
            base_weight[s] = cs_weight(roots.bc_norm[s], k_);
            alpha_level[s] = cone_level(roots.bc_positive[s]);
            damping[s] = std::exp(-translation_ * R(alpha_level[s]));
        }
        coeffs_.assign(cone_->level_offset(max_level_ + 1), Cplx<R>{});
        coeffs_[0] = Cplx<R>(R(1), R(0));
        std::vector<int> target;
        for (int m = 1; m <= max_level_; ++m) {
            for (size_t idx = cone_->level_offset(m); idx < cone_->level_offset(m + 1); ++idx) {
                const auto& nu = cone_->at(idx);
                const Cplx<R> denom = recurrence_denominator(nu, xi_);
                if (std::abs(denom) <= R(eta)) {
                    std::ostringstream os;
                    detail::fmt_nu(os, nu, std::abs(denom));
                    throw NearSingularSpectral(os.str());
                }
                Cplx<R> num{};
                for (size_t s = 0; s < nroots; ++s) {
                    Cplx<R> w = base_weight[s];
                    for (int l = 1; l * alpha_level[s] <= m; ++l) {
                        w *= damping[s];
                        target = nu;
                        for (size_t i = 0; i < target.size(); ++i)
                            target[i] -= l * roots.bc_positive[s][i];
                        const size_t src = cone_->index_of(target);
                        if (src == ConeTable::npos) break;  // dominance is monotone in l
                        num += R(l) * w * coeffs_[src];
                    }
                }
                coeffs_[idx] = num / denom;
            }
        }
    }

    const ConeTable& cone() const { return *cone_; }
    const SpectralPoint<R>& xi() const { return xi_; }
    const CouplingTriple<R>& couplings() const { return k_; }
    int max_level() const { return max_level_; }
    R translation() const { return translation_; }
    const Cplx<R>& coeff_at(size_t flat_index) const { return coeffs_[flat_index]; }
    Cplx<R> coeff(const std::vector<int>& nu) const {
        const size_t idx = cone_->index_of(nu);
        return idx == ConeTable::npos ? Cplx<R>{} : coeffs_[idx];
    }

  private:
    std::shared_ptr<const ConeTable> cone_;
    SpectralPoint<R> xi_;
    CouplingTriple<R> k_;
    int max_level_;
    R translation_;
    std::vector<Cplx<R>> coeffs_;
};

template <class R>
struct CsEval {
    Cplx<R> value{};
    R tail_estimate{};  // empirical, from the last two level magnitudes
};

// Level-by-level sum of the (rescaled) series.  For a table with
// translation c the value equals e^{-c<xi,rho>} phi^cs_xi(x + c rho; k).
template <class R>
CsEval<R> cs_phi_eval(const CsCoefficients<R>& table, const PositionPoint<R>& x,
                      const TruncationPlan& plan) {
    x.require_chamber("cs_phi_eval");
    const ConeTable& cone = table.cone();
    KahanSum<R> acc;
    R last_two[2] = {R(0), R(0)};
    for (int m = 0; m <= table.max_level(); ++m) {
        R level_abs = 0;
        for (size_t idx = cone.level_offset(m); idx < cone.level_offset(m + 1); ++idx) {
            const auto& nu = cone.at(idx);
            Cplx<R> expo = dot(table.xi(), x);
            for (size_t i = 0; i < nu.size(); ++i) expo -= R(nu[i]) * x.entries[i];
            const Cplx<R> term = table.coeff_at(idx) * std::exp(expo);
            acc.add(term);
            level_abs += std::abs(term);
        }
        last_two[0] = last_two[1];
        last_two[1] = level_abs;
    }
    CsEval<R> out;
    out.value = acc.value();
    const R ratio = last_two[0] > R(0) ? std::min(last_two[1] / last_two[0], R(0.95)) : R(0.5);
    out.tail_estimate = last_two[1] * ratio / (R(1) - ratio);
    (void)plan;
    return out;
}

template <class R>
CsEval<R> cs_phi_eval(const SpectralPoint<R>& xi, const PositionPoint<R>& x,
                      const CouplingTriple<R>& k, const TruncationPlan& plan,
                      R translation = R(0)) {
    auto cone = std::make_shared<const ConeTable>(xi.dim(), plan.max_level);
    CsCoefficients<R> table(cone, xi, k, plan.max_level, plan.eta, translation);
    return cs_phi_eval(table, x, plan);
}

template <class R>
CFunctionValue<R> cs_c_function(const SpectralPoint<R>& xi, const CouplingTriple<R>& k,
                                double eta) {
    const int n = xi.dim();
    auto guard = [eta](const Cplx<R>& z, const char* what) {
        if (double(dist_to_nonpositive_integers(z)) <= eta)
            throw CFunctionPole(std::string(what) + " within eta of a nonpositive integer");
    };
    const Cplx<R> half_k1 = k.k1 / R(2);
    Cplx<R> lg{};
    for (int j = 0; j < n; ++j) {
        guard(R(2) * xi[j], "2 xi_j");
        guard(half_k1 + xi[j], "k1/2+xi_j");
        guard(k.k1 + R(2) * xi[j], "k1+2xi_j");
        guard(half_k1 + k.k2 + xi[j], "k1/2+k2+xi_j");
        lg += log_gamma(R(2) * xi[j]) + log_gamma(half_k1 + xi[j]) -
              log_gamma(k.k1 + R(2) * xi[j]) - log_gamma(half_k1 + k.k2 + xi[j]);
    }
    for (int j = 0; j < n; ++j)
        for (int kk = j + 1; kk < n; ++kk) {
            guard(xi[j] + xi[kk], "xi_j+xi_k");
            guard(xi[j] - xi[kk], "xi_j-xi_k");
            guard(k.k0 + xi[j] + xi[kk], "k0+xi_j+xi_k");
            guard(k.k0 + xi[j] - xi[kk], "k0+xi_j-xi_k");
            lg += log_gamma(xi[j] + xi[kk]) + log_gamma(xi[j] - xi[kk]) -
                  log_gamma(k.k0 + xi[j] + xi[kk]) - log_gamma(k.k0 + xi[j] - xi[kk]);
        }
    CFunctionValue<R> out;
    out.log_value = lg;
    out.value = std::exp(lg);
    return out;
}

// gamma(k) = Gamma(k0)^{n(n-1)} ( Gamma(k1) Gamma(k1/2+k2)
//                               / (Gamma(k1/2) Gamma(1/2+k1/2)) )^n
template <class R>
CFunctionValue<R> gamma_factor(int n, const CouplingTriple<R>& k, double eta) {
    auto guard = [eta](const Cplx<R>& z, const char* what) {
        if (double(dist_to_nonpositive_integers(z)) <= eta)
            throw CFunctionPole(std::string(what) + " within eta of a nonpositive integer");
    };
    const Cplx<R> half_k1 = k.k1 / R(2);
    guard(k.k0, "k0");
    guard(k.k1, "k1");
    guard(half_k1 + k.k2, "k1/2+k2");
    guard(half_k1, "k1/2");
    guard(Cplx<R>(R(0.5), R(0)) + half_k1, "1/2+k1/2");
    CFunctionValue<R> out;
    out.log_value = R(n * (n - 1)) * log_gamma(k.k0) +
                    R(n) * (log_gamma(k.k1) + log_gamma(half_k1 + k.k2) - log_gamma(half_k1) -
                            log_gamma(Cplx<R>(R(0.5), R(0)) + half_k1));
    out.value = std::exp(out.log_value);
    return out;
}

// Connection sum Phi^cs_xi(x;k) = sum_w C^cs(w xi;k) phi^cs_{w xi}(x;k).
template <class R>
ConnectionEval<R> cs_whittaker_eval(std::shared_ptr<const ConeTable> cone,
                                    const SpectralPoint<R>& xi, const PositionPoint<R>& x,
                                    const CouplingTriple<R>& k, const TruncationPlan& plan) {
    x.require_chamber("cs_whittaker_eval");
    const auto reg = check_spectral_reg(xi, plan.eta, LatticePart::All);
    if (!reg.ok) throw NearSingularSpectral("cs_whittaker_eval: " + reg.witness);
    const auto group = group_enumerate(xi.dim());
    KahanSum<R> acc;
    KahanSumReal<R> absacc, tailacc;
    for (size_t wi = 0; wi < group.size(); ++wi) {
        const SpectralPoint<R> wxi = apply(group[wi], xi);
        const std::string ctx = " [w index " + std::to_string(wi) + "]";
        try {
            const CFunctionValue<R> cw = cs_c_function(wxi, k, plan.eta);
            CsCoefficients<R> table(cone, wxi, k, plan.max_level, plan.eta);
            const CsEval<R> pe = cs_phi_eval(table, x, plan);
            const Cplx<R> term = cw.value * pe.value;
            acc.add(term);
            absacc.add(std::abs(term));
            tailacc.add(std::abs(cw.value) * pe.tail_estimate);
        } catch (const CFunctionPole& e) {
            throw CFunctionPole(detail::strip_tag(e.what()) + ctx);
        } catch (const NearSingularSpectral& e) {
            throw NearSingularSpectral(detail::strip_tag(e.what()) + ctx);
        }
    }
    ConnectionEval<R> out;
    out.value = acc.value();
    out.tail_bound = tailacc.sum;
    out.kappa = absacc.sum / std::max(std::abs(out.value), R(1e-300));
    return out;
}

// V^cs / U^cs coefficient families of the hypergeometric difference
// equation.  per_factor_scale multiplies every k0/k2-carrying factor; the
// scaled limit checks pass e^{-c}, which realizes the overall scaling
// e^{-(c/2)|J|(2n+1-|J|)} (and its U analogue) factor by factor.
namespace detail {

template <class R>
Cplx<R> cs_signed_product(const std::vector<int>& inside, const std::vector<int>& in_signs,
                          const std::vector<int>& outside, const SpectralPoint<R>& xi,
                          const CouplingTriple<R>& k, int pair_k0_sign, double eta,
                          R per_factor_scale) {
    Cplx<R> prod(R(1), R(0));
    const Cplx<R> half_k1 = k.k1 / R(2);
    for (size_t a = 0; a < inside.size(); ++a) {
        const Cplx<R> exi = R(in_signs[a]) * xi[inside[a]];
        require_away_from_zero(exi, eta, "eps_j xi_j");
        require_away_from_zero(R(1) + R(2) * exi, eta, "1 + 2 eps_j xi_j");
        prod *= per_factor_scale * (exi + half_k1 + k.k2) * (R(1) + R(2) * exi + k.k1) /
                (exi * (R(1) + R(2) * exi));
    }
    for (size_t a = 0; a < inside.size(); ++a)
        for (int kk : outside) {
            const Cplx<R> exi = R(in_signs[a]) * xi[inside[a]];
            const Cplx<R> dplus = exi + xi[kk];
            const Cplx<R> dminus = exi - xi[kk];
            require_away_from_zero(dplus, eta, "eps_j xi_j + xi_k");
            require_away_from_zero(dminus, eta, "eps_j xi_j - xi_k");
            prod *= per_factor_scale * ((dplus + k.k0) / dplus) * ((dminus + k.k0) / dminus);
        }
    for (size_t a = 0; a < inside.size(); ++a)
        for (size_t b = a + 1; b < inside.size(); ++b) {
            const Cplx<R> s =
                R(in_signs[a]) * xi[inside[a]] + R(in_signs[b]) * xi[inside[b]];
            require_away_from_zero(s, eta, "eps_j xi_j + eps_j' xi_j'");
            require_away_from_zero(R(1) + s, eta, "1 + eps_j xi_j + eps_j' xi_j'");
            prod *= per_factor_scale * ((s + k.k0) / s) *
                    ((R(1) + s + R(pair_k0_sign) * k.k0) / (R(1) + s));
        }
    return prod;
}

}  // namespace detail

template <class R>
Cplx<R> cs_coeff_V(const SignedSubset& eJ, const SpectralPoint<R>& xi,
                   const CouplingTriple<R>& k, double eta, R per_factor_scale = R(1)) {
    const auto outside = detail::complement(eJ.indices, xi.dim());
    return detail::cs_signed_product(eJ.indices, eJ.signs, outside, xi, k, +1, eta,
                                     per_factor_scale);
}

template <class R>
Cplx<R> cs_coeff_U(const std::vector<int>& K, int p, const SpectralPoint<R>& xi,
                   const CouplingTriple<R>& k, double eta, R per_factor_scale = R(1)) {
    if (p < 0 || p > int(K.size())) return Cplx<R>{};
    if (p == 0) return Cplx<R>(R(1), R(0));
    const int sign = p % 2 ? -1 : 1;  // (-1)^p; the -k0 pair factors carry the rest
    KahanSum<R> sum;
    const int kn = int(K.size());
    for (unsigned mask = 0; mask < (1u << kn); ++mask) {
        if (int(std::popcount(mask)) != p) continue;
        std::vector<int> inside, outside;
        for (int i = 0; i < kn; ++i)
            ((mask >> i) & 1u ? inside : outside).push_back(K[size_t(i)]);
        std::vector<int> signs(size_t(p), 1);
        for (unsigned smask = 0; smask < (1u << p); ++smask) {
            for (int i = 0; i < p; ++i) signs[size_t(i)] = (smask >> i) & 1u ? -1 : 1;
            sum.add(detail::cs_signed_product(inside, signs, outside, xi, k, -1, eta,
                                              per_factor_scale));
        }
    }
    return R(sign) * sum.value();
}

// E_l(x) = 4^l sum_{|J|=l} prod_{j in J} sinh^2(x_j/2)
template <class R>
Cplx<R> E_ell(int ell, const PositionPoint<R>& x) {
    const int n = x.dim();
    if (ell < 1 || ell > n) throw DomainError("E_ell: need 1 <= ell <= n");
    KahanSum<R> sum;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (int(std::popcount(mask)) != ell) continue;
        Cplx<R> prod(R(1), R(0));
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1u) {
                const Cplx<R> s = std::sinh(x[j] / R(2));
                prod *= R(4) * s * s;
            }
        sum.add(prod);
    }
    return sum.value();
}

// e^{-(c/2) l (2n+1-l)} E_l(x + c rho), assembled in log space per term.
template <class R>
R E_ell_translated_scaled(int ell, const PositionPoint<R>& x, R c) {
    const int n = x.dim();
    if (ell < 1 || ell > n) throw DomainError("E_ell_translated_scaled: need 1 <= ell <= n");
    x.require_chamber("E_ell_translated_scaled");
    R rho_top = 0;  // rho_1 + ... + rho_l = (l/2)(2n+1-l)
    for (int j = 0; j < ell; ++j) rho_top += R(n - j);
    KahanSumReal<R> sum;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (int(std::popcount(mask)) != ell) continue;
        R logterm = -c * rho_top;
        for (int j = 0; j < n; ++j)
            if ((mask >> j) & 1u) {
                const R arg = (x[j].real() + c * R(n - j)) / R(2);
                logterm += R(2) * (std::log(R(2)) + std::log(std::sinh(arg)));
            }
        sum.add(std::exp(logterm));
    }
    return sum.sum;
}

template <class R>
struct ConfluenceSample {
    R c{};
    R err_phi{};
    R err_Phi{};
    bool precision_flag = false;  // truncation estimate dominates the confluence gap
};

// err_phi(c) = | e^{-c<xi,rho>} phi^cs_xi(x+c rho; k^{(c)}) - phi_xi(x;g) |
// err_Phi(c) = | gamma(k^{(c)}) Phi^cs_xi(x+c rho; k^{(c)}) - Phi_xi(x;g) |
// both at matched truncation level, assembled from the rescaled tables.
template <class R>
std::vector<ConfluenceSample<R>> confluence_error(const SpectralPoint<R>& xi,
                                                  const PositionPoint<R>& x, const Cplx<R>& g,
                                                  const std::vector<R>& c_grid,
                                                  const TruncationPlan& plan) {
    x.require_chamber("confluence_error");
    const int n = xi.dim();
    auto cone = std::make_shared<const ConeTable>(n, plan.max_level + plan.probe_levels);
    const auto group = group_enumerate(n);
    std::vector<int> rho(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) rho[size_t(j)] = n - j;

    const HcCoefficients<R> toda_table(cone, xi, g, plan.max_level, plan.eta);
    const Cplx<R> phi_ref = phi_eval(toda_table, x, plan).value;
    const Cplx<R> Phi_ref = whittaker_eval(cone, xi, x, g, plan).value;

    std::vector<ConfluenceSample<R>> out;
    for (const R c : c_grid) {
        const CouplingTriple<R> k = coupling_schedule(c, g);
        const Cplx<R> log_gamma_k = gamma_factor(n, k, plan.eta).log_value;
        KahanSum<R> Phi_acc;
        Cplx<R> phi_hat_id{};
        R est_id = 0;
        for (size_t wi = 0; wi < group.size(); ++wi) {
            const SpectralPoint<R> wxi = apply(group[wi], xi);
            CsCoefficients<R> table(cone, wxi, k, plan.max_level, plan.eta, c);
            const CsEval<R> pe = cs_phi_eval(table, x, plan);
            if (wi == 0) {
                phi_hat_id = pe.value;
                est_id = pe.tail_estimate;
            }
            // gamma C^cs(w xi) phi^cs_{w xi}(x+c rho)
            //   = [gamma e^{c<w xi,rho>} C^cs(w xi)] [e^{-c<w xi,rho>} phi^cs_{w xi}(x+c rho)]
            Cplx<R> crho{};
            for (int j = 0; j < n; ++j) crho += wxi[j] * R(rho[size_t(j)]);
            const Cplx<R> w_weight =
                std::exp(log_gamma_k + c * crho + cs_c_function(wxi, k, plan.eta).log_value);
            Phi_acc.add(w_weight * pe.value);
        }
        ConfluenceSample<R> s;
        s.c = c;
        s.err_phi = std::abs(phi_hat_id - phi_ref);
        s.err_Phi = std::abs(Phi_acc.value() - Phi_ref);
        s.precision_flag = s.err_phi < R(10) * est_id;
        out.push_back(s);
    }
    return out;
}

// Delta_U(xi) = prod over dominant mu > 0 whose hyperplane
// H_mu = { <mu-2xi,mu> = 0 } meets the closed ball U of the factors
// <mu-2xi,mu>.  The point-to-hyperplane distance |<mu,c> - <mu,mu>/2| / |mu|
// decides membership; only |mu| <= 2(|center|+radius) can qualify.
template <class R>
Cplx<R> normalization_delta(const SpectralPoint<R>& center, R radius, const SpectralPoint<R>& xi,
                            const ConeTable& cone) {
    Cplx<R> prod(R(1), R(0));
    for (int m = 1; m <= cone.max_level(); ++m)
        for (const auto& mu : cone.level(m)) {
            R mu_norm2 = 0;
            Cplx<R> mu_dot_c{};
            for (size_t i = 0; i < mu.size(); ++i) {
                mu_norm2 += R(mu[i]) * R(mu[i]);
                mu_dot_c += R(mu[i]) * center.entries[i];
            }
            const R distance = std::abs(mu_dot_c - mu_norm2 / R(2)) / std::sqrt(mu_norm2);
            if (distance <= radius) prod *= recurrence_denominator(mu, xi);
        }
    return prod;
}

template <class R>
Cplx<R> normalization_delta(const SpectralPoint<R>& center, R radius, const SpectralPoint<R>& xi,
                            int max_level) {
    // intrinsic cap: <mu,rho> <= |mu| |rho| and |mu| <= 2(|center|+radius)
    const int n = center.dim();
    R c_norm = 0, rho_norm = 0;
    for (int j = 0; j < n; ++j) {
        c_norm += std::norm(center[j]);
        rho_norm += R((n - j) * (n - j));
    }
    const R cap = R(2) * (std::sqrt(c_norm) + radius) * std::sqrt(rho_norm);
    const int level_cap = std::max(max_level, int(cap) + 1);
    ConeTable cone(n, level_cap);
    return normalization_delta(center, radius, xi, cone);
}

}  // namespace toda
