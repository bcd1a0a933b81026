#pragma once

// Harish-Chandra series for the Toda Laplacian with Morse boundary terms,
//
//   L_x = sum_j d^2/dx_j^2 - sum_{alpha in S} a_alpha e^{-<alpha,x>},
//   phi_xi(x;g) = sum_{nu >= 0} a_nu(xi;g) e^{<xi-nu, x>},
//   <nu-2xi,nu> a_nu = sum_{alpha in S} a_alpha a_{nu-alpha},   a_0 = 1,
//
// together with a certified truncation tail bound built from the growth
// estimate |a_nu| <= A^m / m!  (m = <nu,rho>, A = 1 + c n / a) with the
// constants a, b, c measured at the actual evaluation point.

#include <limits>
#include <memory>
#include <sstream>

#include "toda/cone.hpp"
#include "toda/errors.hpp"
#include "toda/numerics.hpp"
#include "toda/regularity.hpp"
#include "toda/types.hpp"

namespace toda {

struct TruncationPlan {
    int max_level = 30;    // M
    double tol = 1e-8;     // certified tail gate; +infinity requests no certification
    double eta = 1e-9;     // exclusion distance from the singular lattices
    int probe_levels = 20; // extra levels scanned for the empirical constant a

    static TruncationPlan uncertified(int M, double eta = 1e-9) {
        return TruncationPlan{M, std::numeric_limits<double>::infinity(), eta, 20};
    }
};

template <class R>
struct TailConstants {
    R a{}, b{}, c{}, A{}, C{};
};

// Coefficient table a_nu(xi;g) for levels 0..M, built level by level.
// Immutable once constructed; throws NearSingularSpectral when some
// denominator |<nu-2xi,nu>| falls within eta.
template <class R>
class HcCoefficients {
  public:
    HcCoefficients(std::shared_ptr<const ConeTable> cone, SpectralPoint<R> xi, Cplx<R> g,
                   int max_level, double eta)
        : cone_(std::move(cone)), xi_(std::move(xi)), g_(g), max_level_(max_level) {
        if (max_level_ > cone_->max_level() || xi_.dim() != cone_->dim())
            throw DomainError("HcCoefficients: cone table too small or dimension mismatch");
        const RootData roots = RootData::make(cone_->dim());
        const size_t count = cone_->level_offset(max_level_ + 1);
        coeffs_.assign(count, Cplx<R>{});
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
                for (size_t s = 0; s < roots.S.size(); ++s) {
                    target = nu;
                    bool ok = true;
                    for (size_t i = 0; i < target.size(); ++i) target[i] -= roots.S[s][i];
                    // nu - alpha outside the cone contributes 0
                    const size_t src = cone_->index_of(target);
                    if (src == ConeTable::npos) ok = false;
                    if (ok) num += roots.template toda_weight<R>(s, g_) * coeffs_[src];
                }
                coeffs_[idx] = num / denom;
            }
        }
    }

    const ConeTable& cone() const { return *cone_; }
    std::shared_ptr<const ConeTable> cone_ptr() const { return cone_; }
    const SpectralPoint<R>& xi() const { return xi_; }
    const Cplx<R>& g() const { return g_; }
    int max_level() const { return max_level_; }

    const Cplx<R>& coeff_at(size_t flat_index) const { return coeffs_[flat_index]; }
    Cplx<R> coeff(const std::vector<int>& nu) const {
        const size_t idx = cone_->index_of(nu);
        if (idx == ConeTable::npos) return Cplx<R>{};
        if (cone_->level_of_index(idx) > max_level_)
            throw DomainError("HcCoefficients: level exceeds table size");
        return coeffs_[idx];
    }

  private:
    std::shared_ptr<const ConeTable> cone_;
    SpectralPoint<R> xi_;
    Cplx<R> g_;
    int max_level_;
    std::vector<Cplx<R>> coeffs_;
};

// Empirical constants of the growth estimate at the evaluation point:
//   a: min |<nu-2xi,nu>| / m^2 over 0 < nu up to level M + probe (clipped at eta)
//   b: max_alpha |e^{-<alpha,x>}|^{1/<alpha,rho>}
//   c: max_alpha |a_alpha|
//   A = 1 + c n / a,  C = b A.
template <class R>
TailConstants<R> tail_constants(const ConeTable& cone, const SpectralPoint<R>& xi,
                                const PositionPoint<R>& x, const Cplx<R>& g,
                                const TruncationPlan& plan) {
    const int n = cone.dim();
    const RootData roots = RootData::make(n);
    TailConstants<R> tc;
    tc.a = std::max(spectral_margin_ratio(cone, xi, plan.max_level + plan.probe_levels),
                    R(plan.eta));
    tc.b = R(0);
    for (const auto& alpha : roots.S) {
        R re = 0;
        for (size_t i = 0; i < alpha.size(); ++i) re += R(alpha[i]) * x.entries[i].real();
        tc.b = std::max(tc.b, std::exp(-re / R(cone_level(alpha))));
    }
    tc.c = roots.toda_weight_bound(g);
    tc.A = R(1) + tc.c * R(n) / tc.a;
    tc.C = tc.b * tc.A;
    return tc;
}

// |e^{<xi,x>}| Sum_{m>M} binom(n+m-1,m) C^m / m!, accumulated until the
// terms drop below 1e-3 * tol past the peak of C^m/m!.
template <class R>
R certified_tail_bound(const TailConstants<R>& tc, int n, int M, const SpectralPoint<R>& xi,
                       const PositionPoint<R>& x, double tol) {
    const R C = tc.C;
    R term = R(1);  // binom(n+m-1,m) C^m / m! at m = M+1, built incrementally
    for (int m = 1; m <= M + 1; ++m) term *= C / R(m) * R(n + m - 1) / R(m);
    KahanSumReal<R> sum;
    sum.add(term);
    const R cut = R(1e-3) * (std::isfinite(tol) ? R(tol) : R(1e-12));
    int m = M + 1;
    const int hard_cap = 200000;
    while (m < hard_cap) {
        ++m;
        term *= C / R(m) * R(n + m - 1) / R(m);
        sum.add(term);
        if (!std::isfinite(double(term))) return std::numeric_limits<R>::infinity();
        if (R(m) > R(2) * C + R(M) && term < cut) break;
    }
    if (m >= hard_cap) return std::numeric_limits<R>::infinity();
    return std::exp(dot(xi, x).real()) * sum.sum;
}

template <class R>
struct SeriesEval {
    Cplx<R> value{};
    R tail_bound{};
    TailConstants<R> constants{};
};

// Truncated series, summed level by level in canonical order with
// compensated summation.  Throws TailNotConverged when the certified bound
// exceeds plan.tol.
template <class R>
SeriesEval<R> phi_eval(const HcCoefficients<R>& table, const PositionPoint<R>& x,
                       const TruncationPlan& plan) {
    const ConeTable& cone = table.cone();
    KahanSum<R> acc;
    for (size_t idx = 0; idx < cone.level_offset(table.max_level() + 1); ++idx) {
        const auto& nu = cone.at(idx);
        Cplx<R> expo = dot(table.xi(), x);
        for (size_t i = 0; i < nu.size(); ++i) expo -= R(nu[i]) * x.entries[i];
        acc.add(table.coeff_at(idx) * std::exp(expo));
    }
    SeriesEval<R> out;
    out.value = acc.value();
    out.constants = tail_constants(cone, table.xi(), x, table.g(), plan);
    out.tail_bound =
        certified_tail_bound(out.constants, cone.dim(), table.max_level(), table.xi(), x, plan.tol);
    if (!(out.tail_bound <= R(plan.tol))) {
        std::ostringstream os;
        os << "tail bound " << double(out.tail_bound) << " > tol " << plan.tol << " at level "
           << table.max_level();
        throw TailNotConverged(os.str());
    }
    return out;
}

template <class R>
SeriesEval<R> phi_eval(const SpectralPoint<R>& xi, const PositionPoint<R>& x, const Cplx<R>& g,
                       const TruncationPlan& plan) {
    auto cone = std::make_shared<const ConeTable>(xi.dim(), plan.max_level + plan.probe_levels);
    HcCoefficients<R> table(cone, xi, g, plan.max_level, plan.eta);
    return phi_eval(table, x, plan);
}

// |L_x phi - <xi,xi> phi| / max(|phi|, 1e-30) on the truncated series;
// the Laplacian acts exactly on each exponential (factor <xi-nu,xi-nu>)
// and the potential multiplies the truncated sum.
template <class R>
R toda_laplacian_residual(const HcCoefficients<R>& table, const PositionPoint<R>& x,
                          const TruncationPlan& plan) {
    const ConeTable& cone = table.cone();
    const int n = cone.dim();
    const RootData roots = RootData::make(n);
    KahanSum<R> series, lap;
    for (size_t idx = 0; idx < cone.level_offset(table.max_level() + 1); ++idx) {
        const auto& nu = cone.at(idx);
        Cplx<R> expo = dot(table.xi(), x);
        Cplx<R> quad{};
        for (size_t i = 0; i < nu.size(); ++i) {
            expo -= R(nu[i]) * x.entries[i];
            const Cplx<R> d = table.xi().entries[i] - Cplx<R>(R(nu[i]), R(0));
            quad += d * d;
        }
        const Cplx<R> term = table.coeff_at(idx) * std::exp(expo);
        series.add(term);
        lap.add(quad * term);
    }
    Cplx<R> potential{};
    for (size_t s = 0; s < roots.S.size(); ++s) {
        Cplx<R> ax{};
        for (size_t i = 0; i < roots.S[s].size(); ++i) ax += R(roots.S[s][i]) * x.entries[i];
        potential += roots.template toda_weight<R>(s, table.g()) * std::exp(-ax);
    }
    const Cplx<R> phi = series.value();
    const Cplx<R> lhs = lap.value() - potential * phi;
    const Cplx<R> eig = dot(table.xi(), table.xi());
    (void)plan;
    return std::abs(lhs - eig * phi) / std::max(std::abs(phi), R(1e-30));
}

template <class R>
R toda_laplacian_residual(const SpectralPoint<R>& xi, const PositionPoint<R>& x, const Cplx<R>& g,
                          const TruncationPlan& plan) {
    auto cone = std::make_shared<const ConeTable>(xi.dim(), plan.max_level + plan.probe_levels);
    HcCoefficients<R> table(cone, xi, g, plan.max_level, plan.eta);
    return toda_laplacian_residual(table, x, plan);
}

}  // namespace toda
