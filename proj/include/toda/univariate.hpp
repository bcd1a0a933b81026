#pragma once

// Independent single-variable references used as ground truth for the
// multivariate engine:
//
//   phi_xi(x;g) = e^{xi x} e^{-e^{-x}/2} 1F1(1/2+g-xi, 1-2xi; e^{-x})
//   Phi_xi(x;g) = Gamma(2xi)/Gamma(1/2+g+xi) phi_xi
//               + Gamma(-2xi)/Gamma(1/2+g-xi) phi_{-xi}
//   K_nu(z)     = int_0^inf e^{-z cosh t} cosh(nu t) dt        (Re z > 0)
//
// together with the one-variable difference equation
//
//   (1/2+g+xi)/(2xi(2xi+1)) (Phi_{xi+1}-Phi_xi)
// + (1/2+g-xi)/(2xi(2xi-1)) (Phi_{xi-1}-Phi_xi) = e^x Phi_xi.
//
// Nothing here calls the series engine; all comparisons are cross-module.

#include <cmath>

#include "toda/errors.hpp"
#include "toda/numerics.hpp"

namespace toda {

template <class R>
struct KummerParams {
    Cplx<R> a{}, b{}, z{};
};

// Taylor series of 1F1; entire in z, so plain term recursion with
// compensated summation suffices for the moderate |z| used here.
template <class R>
Cplx<R> kummer_1f1(const KummerParams<R>& p, double eta = 1e-9) {
    if (double(dist_to_nonpositive_integers(p.b)) <= eta)
        throw ParameterPole("kummer_1f1: b within eta of a nonpositive integer");
    KahanSum<R> sum;
    Cplx<R> term(R(1), R(0));
    sum.add(term);
    const R eps = std::numeric_limits<R>::epsilon();
    int settled = 0;
    for (int k = 0; k < 10000; ++k) {
        term *= (p.a + R(k)) / (p.b + R(k)) * p.z / R(k + 1);
        sum.add(term);
        if (std::abs(term) <= eps * std::abs(sum.value())) {
            if (++settled >= 3) return sum.value();
        } else {
            settled = 0;
        }
    }
    throw QuadratureNotConverged("kummer_1f1: series did not settle in 10000 terms");
}

template <class R>
Cplx<R> whittaker_M_phi(const Cplx<R>& xi, const Cplx<R>& x, const Cplx<R>& g,
                        double eta = 1e-9) {
    if (double(dist_to_positive_integers(R(2) * xi)) <= eta)
        throw ParameterPole("whittaker_M_phi: 2 xi within eta of a positive integer");
    const Cplx<R> q = std::exp(-x);
    KummerParams<R> p{Cplx<R>(R(0.5), R(0)) + g - xi, Cplx<R>(R(1), R(0)) - R(2) * xi, q};
    return std::exp(xi * x) * std::exp(-q / R(2)) * kummer_1f1(p, eta);
}

template <class R>
Cplx<R> whittaker_W_Phi(const Cplx<R>& xi, const Cplx<R>& x, const Cplx<R>& g,
                        double eta = 1e-9) {
    if (double(dist_to_integers(R(2) * xi)) <= eta)
        throw ParameterPole("whittaker_W_Phi: 2 xi within eta of an integer");
    const Cplx<R> half(R(0.5), R(0));
    const Cplx<R> cp = std::exp(log_gamma(R(2) * xi) - log_gamma(half + g + xi));
    const Cplx<R> cm = std::exp(log_gamma(-R(2) * xi) - log_gamma(half + g - xi));
    return cp * whittaker_M_phi(xi, x, g, eta) + cm * whittaker_M_phi(-xi, x, g, eta);
}

// Tanh-sinh quadrature of the K integral on [0, T], with T chosen so the
// integrand has decayed below 1e-20 of its peak.  The node set is a
// deterministic function of the tolerance.
template <class R>
Cplx<R> bessel_K_quad(const Cplx<R>& nu, const Cplx<R>& z, R rel_tol = R(1e-13)) {
    if (!(z.real() > R(0))) throw DomainError("bessel_K_quad: requires Re z > 0");
    // z (cosh T - 1) >= 46 + |Re nu| T  ensures the stated decay
    R T = std::acosh(R(1) + R(46) / z.real());
    const R abs_re_nu = std::abs(nu.real());
    for (int it = 0; it < 4 && abs_re_nu > R(0); ++it)
        T = std::acosh(R(1) + (R(46) + abs_re_nu * T) / z.real());

    auto f = [&](R t) { return std::exp(-z * std::cosh(t)) * std::cosh(nu * t); };
    const R half = T / R(2);
    const R pi_half = pi_v<R> / R(2);

    auto level_sum = [&](R h, bool odd_only) {
        KahanSum<R> s;
        const int step = odd_only ? 2 : 1;
        const int start = odd_only ? 1 : 0;
        // |u| beyond ~4.3 maps within ~1e-25 T of the endpoints
        const int kmax = int(R(4.3) / h) + 1;
        for (int k = start; k <= kmax; k += step) {
            for (int sgn : {1, -1}) {
                if (k == 0 && sgn < 0) continue;
                const R u = R(sgn) * R(k) * h;
                const R su = pi_half * std::sinh(u);
                const R t = half * (R(1) + std::tanh(su));
                const R csu = std::cosh(su);
                const R w = half * pi_half * std::cosh(u) / (csu * csu);
                if (!(w > R(0)) || t <= R(0) || t >= T) continue;
                s.add(w * f(t));
            }
        }
        return s.value();
    };

    R h = R(0.5);
    Cplx<R> integral = h * level_sum(h, false);
    for (int lvl = 0; lvl < 12; ++lvl) {
        const Cplx<R> refined = integral / R(2) + (h / R(2)) * level_sum(h / R(2), true);
        const R change = std::abs(refined - integral);
        integral = refined;
        h /= R(2);
        if (lvl >= 2 && change <= rel_tol * std::abs(integral)) return integral;
    }
    throw QuadratureNotConverged("bessel_K_quad: tanh-sinh levels exhausted");
}

// Relative residual of the one-variable difference equation.
template <class R>
R univariate_dde_residual(const Cplx<R>& xi, const Cplx<R>& x, const Cplx<R>& g,
                          double eta = 1e-9) {
    const Cplx<R> two_xi = R(2) * xi;
    if (std::abs(two_xi) <= R(eta) || std::abs(two_xi + R(1)) <= R(eta) ||
        std::abs(two_xi - R(1)) <= R(eta))
        throw ParameterPole("univariate_dde_residual: 2xi or 2xi+-1 within eta of 0");
    const Cplx<R> half(R(0.5), R(0));
    const Cplx<R> Phi = whittaker_W_Phi(xi, x, g, eta);
    const Cplx<R> Phip = whittaker_W_Phi(xi + R(1), x, g, eta);
    const Cplx<R> Phim = whittaker_W_Phi(xi - R(1), x, g, eta);
    const Cplx<R> vp = (half + g + xi) / (two_xi * (two_xi + R(1)));
    const Cplx<R> vm = (half + g - xi) / (two_xi * (two_xi - R(1)));
    const Cplx<R> rhs = std::exp(x) * Phi;
    return std::abs(vp * (Phip - Phi) + vm * (Phim - Phi) - rhs) / std::abs(rhs);
}

}  // namespace toda
