#pragma once

// Connection formula producing the W-invariant Whittaker function
//
//   Phi_xi(x;g) = sum_{w in W} C(w xi; g) phi_{w xi}(x; g),
//   C(xi;g) = prod_j Gamma(2 xi_j)/Gamma(1/2+g+xi_j)
//             prod_{j<k} Gamma(xi_j+xi_k) Gamma(xi_j-xi_k).
//
// The c-function is kept in log form (sums of log-gamma, one final exp)
// so moderate Gamma growth never overflows, and the 2^n n!-term sum
// reports its cancellation condition number kappa.

#include <functional>
#include <memory>
#include <sstream>

#include "toda/group.hpp"
#include "toda/hc_series.hpp"
#include "toda/numerics.hpp"
#include "toda/regularity.hpp"

namespace toda {

template <class R>
struct CFunctionValue {
    Cplx<R> value{};
    Cplx<R> log_value{};  // source of truth; value = exp(log_value)
};

template <class R>
CFunctionValue<R> c_function(const SpectralPoint<R>& xi, const Cplx<R>& g, double eta) {
    const int n = xi.dim();
    auto guard = [eta](const Cplx<R>& z, const char* what) {
        if (double(dist_to_nonpositive_integers(z)) <= eta)
            throw CFunctionPole(std::string(what) + " within eta of a nonpositive integer");
    };
    Cplx<R> lg{};
    for (int j = 0; j < n; ++j) {
        guard(R(2) * xi[j], "2 xi_j");
        guard(Cplx<R>(R(0.5), R(0)) + g + xi[j], "1/2+g+xi_j");
        lg += log_gamma(R(2) * xi[j]) - log_gamma(Cplx<R>(R(0.5), R(0)) + g + xi[j]);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            guard(xi[j] + xi[k], "xi_j+xi_k");
            guard(xi[j] - xi[k], "xi_j-xi_k");
            lg += log_gamma(xi[j] + xi[k]) + log_gamma(xi[j] - xi[k]);
        }
    CFunctionValue<R> out;
    out.log_value = lg;
    out.value = std::exp(lg);
    return out;
}

template <class R>
struct ConnectionEval {
    Cplx<R> value{};
    R tail_bound{};
    R kappa{};  // sum_w |term_w| / |sum_w term_w|
};

// Ordered W-sum of c-function-weighted series evaluations.  Requires
// xi in C_reg within eta; each w xi must pass the U^n check (the table
// build throws NearSingularSpectral otherwise, annotated with w).
template <class R>
ConnectionEval<R> whittaker_eval(std::shared_ptr<const ConeTable> cone,
                                 const SpectralPoint<R>& xi, const PositionPoint<R>& x,
                                 const Cplx<R>& g, const TruncationPlan& plan) {
    const auto reg = check_spectral_reg(xi, plan.eta, LatticePart::All);
    if (!reg.ok) throw NearSingularSpectral("whittaker_eval: " + reg.witness);
    const auto group = group_enumerate(xi.dim());
    KahanSum<R> acc;
    KahanSumReal<R> absacc, tailacc;
    for (size_t wi = 0; wi < group.size(); ++wi) {
        const SpectralPoint<R> wxi = apply(group[wi], xi);
        const std::string ctx = " [w index " + std::to_string(wi) + "]";
        try {
            const CFunctionValue<R> cw = c_function(wxi, g, plan.eta);
            HcCoefficients<R> table(cone, wxi, g, plan.max_level, plan.eta);
            const SeriesEval<R> pe = phi_eval(table, x, plan);
            const Cplx<R> term = cw.value * pe.value;
            acc.add(term);
            absacc.add(std::abs(term));
            tailacc.add(std::abs(cw.value) * pe.tail_bound);
        } catch (const CFunctionPole& e) {
            throw CFunctionPole(detail::strip_tag(e.what()) + ctx);
        } catch (const NearSingularSpectral& e) {
            throw NearSingularSpectral(detail::strip_tag(e.what()) + ctx);
        } catch (const TailNotConverged& e) {
            throw TailNotConverged(detail::strip_tag(e.what()) + ctx);
        }
    }
    ConnectionEval<R> out;
    out.value = acc.value();
    out.tail_bound = tailacc.sum;
    out.kappa = absacc.sum / std::max(std::abs(out.value), R(1e-300));
    return out;
}

template <class R>
ConnectionEval<R> whittaker_eval(const SpectralPoint<R>& xi, const PositionPoint<R>& x,
                                 const Cplx<R>& g, const TruncationPlan& plan) {
    auto cone = std::make_shared<const ConeTable>(xi.dim(), plan.max_level + plan.probe_levels);
    return whittaker_eval(cone, xi, x, g, plan);
}

}  // namespace toda
