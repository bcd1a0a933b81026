#pragma once

// Bispectral dual side: the coefficient families
//
//   V_{eJ}(xi;g) = prod_{j in J} (1/2+g+e_j xi_j) / (2xi_j (2xi_j+e_j))
//                  prod_{j in J, k not in J} (xi_j^2-xi_k^2)^{-1}
//                  prod_{j<j' in J} (e_j xi_j+e_j' xi_j')^{-1} (1+e_j xi_j+e_j' xi_j')^{-1}
//
//   U_{K,p}(xi;g) = (-1)^{p(p+1)/2} sum_{I subset K, |I|=p, signs} ( ... )
//
// the difference operators D_l f = sum_{|J|<=l, eps} U_{J^c,l-|J|} V_{eps J} f(xi+e_{eps J}),
// relative residuals of D_l Phi = e^{x_1+...+x_l} Phi, and residue probes
// along the hyperplanes 2 xi_1 = m and xi_1 + xi_2 = m.

#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "toda/connection.hpp"

namespace toda {

namespace detail {

// Shared product shape of V and of each U summand: "inside" indices carry the
// single factors, "outside" indices the crossing factors.
template <class R>
Cplx<R> signed_product(const std::vector<int>& inside, const std::vector<int>& in_signs,
                       const std::vector<int>& outside, const SpectralPoint<R>& xi,
                       const Cplx<R>& g, double eta) {
    const Cplx<R> half(R(0.5), R(0));
    Cplx<R> prod(R(1), R(0));
    for (size_t a = 0; a < inside.size(); ++a) {
        const int j = inside[a];
        const R ej = R(in_signs[a]);
        const Cplx<R> two_xi = R(2) * xi[j];
        require_away_from_zero(two_xi, eta, "2 xi_j");
        require_away_from_zero(two_xi + ej, eta, "2 xi_j + eps_j");
        prod *= (half + g + ej * xi[j]) / (two_xi * (two_xi + ej));
    }
    for (int j : inside)
        for (int k : outside) {
            const Cplx<R> d = xi[j] * xi[j] - xi[k] * xi[k];
            require_away_from_zero(d, eta, "xi_j^2 - xi_k^2");
            prod /= d;
        }
    for (size_t a = 0; a < inside.size(); ++a)
        for (size_t b = a + 1; b < inside.size(); ++b) {
            const Cplx<R> s = R(in_signs[a]) * xi[inside[a]] + R(in_signs[b]) * xi[inside[b]];
            require_away_from_zero(s, eta, "eps_j xi_j + eps_j' xi_j'");
            require_away_from_zero(R(1) + s, eta, "1 + eps_j xi_j + eps_j' xi_j'");
            prod /= s * (R(1) + s);
        }
    return prod;
}

}  // namespace detail

template <class R>
Cplx<R> coeff_V(const SignedSubset& eJ, const SpectralPoint<R>& xi, const Cplx<R>& g,
                double eta) {
    const auto outside = detail::complement(eJ.indices, xi.dim());
    return detail::signed_product(eJ.indices, eJ.signs, outside, xi, g, eta);
}

// K given as a strictly increasing index list; crossing factors run inside K only.
template <class R>
Cplx<R> coeff_U(const std::vector<int>& K, int p, const SpectralPoint<R>& xi, const Cplx<R>& g,
                double eta) {
    if (p < 0 || p > int(K.size())) return Cplx<R>{};
    if (p == 0) return Cplx<R>(R(1), R(0));
    const int sign = (p * (p + 1) / 2) % 2 ? -1 : 1;
    KahanSum<R> sum;
    // subsets I of K with |I| = p via mask over K's positions
    const int kn = int(K.size());
    for (unsigned mask = 0; mask < (1u << kn); ++mask) {
        if (int(std::popcount(mask)) != p) continue;
        std::vector<int> inside, outside;
        for (int i = 0; i < kn; ++i)
            ((mask >> i) & 1u ? inside : outside).push_back(K[size_t(i)]);
        std::vector<int> signs(size_t(p), 1);
        for (unsigned smask = 0; smask < (1u << p); ++smask) {
            for (int i = 0; i < p; ++i) signs[size_t(i)] = (smask >> i) & 1u ? -1 : 1;
            sum.add(detail::signed_product(inside, signs, outside, xi, g, eta));
        }
    }
    return R(sign) * sum.value();
}

// D_l applied to an opaque function of the spectral point, so the same
// operator acts on Phi, on phi, and on synthetic test functions.
template <class R>
using SpectralFn = std::function<Cplx<R>(const SpectralPoint<R>&)>;

template <class R>
struct ApplyDResult {
    Cplx<R> value{};
    R abs_sum{};  // sum of |term|, for conditioning
};

template <class R>
ApplyDResult<R> apply_D(int ell, const SpectralFn<R>& f, const SpectralPoint<R>& xi,
                        const Cplx<R>& g, double eta) {
    const int n = xi.dim();
    if (ell < 1 || ell > n) throw DomainError("apply_D: need 1 <= ell <= n");
    ApplyDResult<R> out;
    KahanSum<R> acc;
    KahanSumReal<R> absacc;
    for (unsigned jmask = 0; jmask < (1u << n); ++jmask) {
        const int jsz = int(std::popcount(jmask));
        if (jsz > ell) continue;
        SignedSubset eJ;
        for (int j = 0; j < n; ++j)
            if ((jmask >> j) & 1u) eJ.indices.push_back(j);
        eJ.signs.assign(size_t(jsz), 1);
        const auto K = detail::complement(eJ.indices, n);
        const Cplx<R> u = coeff_U(K, ell - jsz, xi, g, eta);
        for (unsigned smask = 0; smask < (1u << jsz); ++smask) {
            for (int i = 0; i < jsz; ++i) eJ.signs[size_t(i)] = (smask >> i) & 1u ? -1 : 1;
            const Cplx<R> v = coeff_V(eJ, xi, g, eta);
            SpectralPoint<R> shifted = xi;
            const auto sh = eJ.shift(n);
            for (int j = 0; j < n; ++j) shifted[j] += R(sh[size_t(j)]);
            const Cplx<R> term = u * v * f(shifted);
            acc.add(term);
            absacc.add(std::abs(term));
        }
    }
    out.value = acc.value();
    out.abs_sum = absacc.sum;
    return out;
}

template <class R>
struct DdeResidual {
    R residual{};
    R condition{};
};

// | D_l Phi - e^{x_1+...+x_l} Phi | / | e^{x_1+...+x_l} Phi |, with the
// 2^n n!-term Phi evaluations memoized across the 3^n shift neighborhood.
template <class R>
DdeResidual<R> dde_residual(int ell, const SpectralPoint<R>& xi, const PositionPoint<R>& x,
                            const Cplx<R>& g, const TruncationPlan& plan,
                            std::shared_ptr<const ConeTable> cone = nullptr) {
    const int n = xi.dim();
    if (!cone)
        cone = std::make_shared<const ConeTable>(n, plan.max_level + plan.probe_levels);
    std::map<std::vector<int>, Cplx<R>> memo;
    auto phi_fn = [&](const SpectralPoint<R>& p) -> Cplx<R> {
        std::vector<int> key(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            key[size_t(j)] = int(std::lround(double(p[j].real() - xi[j].real())));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const Cplx<R> v = whittaker_eval(cone, p, x, g, plan).value;
        memo.emplace(key, v);
        return v;
    };
    const auto d = apply_D<R>(ell, phi_fn, xi, g, plan.eta);
    Cplx<R> xsum{};
    for (int j = 0; j < ell; ++j) xsum += x[j];
    const Cplx<R> rhs = std::exp(xsum) * phi_fn(xi);
    DdeResidual<R> out;
    out.residual = std::abs(d.value - rhs) / std::abs(rhs);
    out.condition = d.abs_sum / std::abs(rhs);
    return out;
}

enum class HyperplaneFamily {
    SingleTwoXi1,   // 2 xi_1 = m, probed along e_1
    PairXi1PlusXi2  // xi_1 + xi_2 = m, probed along (e_1+e_2)/2
};

template <class R>
struct ResidueProbe {
    R slope{};                 // fitted power-law exponent of |r(delta)| vs delta
    Cplx<R> extrapolated{};    // Richardson value at delta -> 0
    R reference_magnitude{};   // |f| at the largest offset, for normalization
    std::vector<Cplx<R>> samples;
};

// Evaluates r(delta) = (2 xi_1 - m) f  (resp. (xi_1+xi_2-m) f) at
// xi_hat + delta * normal for a halving sequence of offsets; a vanishing
// residue shows slope ~ 1 and extrapolated value ~ 0, a genuine simple pole
// slope ~ 0 and a finite limit.  Simple poles mean r is linear in delta up
// to curvature, so three nodes (delta, delta/2, delta/4) suffice.
template <class R>
ResidueProbe<R> residue_probe(HyperplaneFamily family, int m, const SpectralPoint<R>& xi_hat,
                              const SpectralFn<R>& f, const std::vector<R>& deltas,
                              R noise_floor = std::numeric_limits<R>::epsilon()) {
    if (deltas.size() < 3) throw DomainError("residue_probe: need at least 3 offsets");
    ResidueProbe<R> out;
    const int n = xi_hat.dim();
    if (family == HyperplaneFamily::PairXi1PlusXi2 && n < 2)
        throw DomainError("residue_probe: pair family needs n >= 2");
    R fmag_max = 0;
    for (const R delta : deltas) {
        SpectralPoint<R> p = xi_hat;
        Cplx<R> factor;
        if (family == HyperplaneFamily::SingleTwoXi1) {
            p[0] += delta;
            factor = R(2) * p[0] - R(m);
        } else {
            p[0] += delta / R(2);
            p[1] += delta / R(2);
            factor = p[0] + p[1] - R(m);
        }
        const Cplx<R> fv = f(p);
        fmag_max = std::max(fmag_max, std::abs(fv));
        out.samples.push_back(factor * fv);
    }
    out.reference_magnitude = fmag_max;
    const R smallest = deltas.back();
    if (std::abs(out.samples.back()) < noise_floor * fmag_max * R(8))
        throw PrecisionExhausted("residue_probe: |r(delta)| at the noise floor at delta = " +
                                 std::to_string(double(smallest)));
    KahanSumReal<R> slope_acc;
    for (size_t i = 0; i + 1 < out.samples.size(); ++i) {
        const R num = std::log(std::abs(out.samples[i]) / std::abs(out.samples[i + 1]));
        const R den = std::log(deltas[i] / deltas[i + 1]);
        slope_acc.add(num / den);
    }
    out.slope = slope_acc.sum / R(out.samples.size() - 1);
    // second-order Richardson on the last three nodes (halving assumed)
    const size_t k = out.samples.size();
    out.extrapolated =
        (R(8) * out.samples[k - 1] - R(6) * out.samples[k - 2] + out.samples[k - 3]) / R(3);
    return out;
}

}  // namespace toda
