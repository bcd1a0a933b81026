#pragma once

// Regularity classifiers for the spectral variable.  The excluded sets are
// exact; floating point gets an absolute exclusion distance eta, and points
// closer than eta are reported near-singular rather than silently accepted.
//
//   U^n        : <nu-2xi,nu> != 0 for all dominant nu > 0 (up to a level cap)
//   C_reg      : 2 xi_j not in Z,     xi_j +- xi_k not in Z      (j < k)
//   C_reg,+    : 2 xi_j not in Z_{>0},  xi_j +- xi_k not in Z_{>0}
//   C_reg,-    : 2 xi_j not in Z_{<=0}, xi_j +- xi_k not in Z_{<=0}

#include <algorithm>
#include <sstream>
#include <string>

#include "toda/cone.hpp"
#include "toda/numerics.hpp"
#include "toda/types.hpp"

namespace toda {

struct RegularityReport {
    bool ok = true;
    double margin = 0;     // distance to the nearest excluded point/hyperplane
    std::string witness;   // violated constraint when !ok
};

namespace detail {
template <class R>
void fmt_nu(std::ostringstream& os, const std::vector<int>& nu, R absval) {
    os << "|<nu-2xi,nu>| = " << double(absval) << " at nu = (";
    for (size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
    os << ")";
}
}  // namespace detail

// Smallest |<nu-2xi,nu>| over 0 < nu with level <= level_cap.
template <class R>
RegularityReport check_spectral_U(const ConeTable& cone, const SpectralPoint<R>& xi,
                                  int level_cap, double eta) {
    RegularityReport rep;
    rep.margin = std::numeric_limits<double>::infinity();
    const int cap = std::min(level_cap, cone.max_level());
    for (int m = 1; m <= cap; ++m)
        for (const auto& nu : cone.level(m)) {
            const R d = std::abs(recurrence_denominator(nu, xi));
            if (double(d) < rep.margin) rep.margin = double(d);
            if (double(d) <= eta) {
                rep.ok = false;
                std::ostringstream os;
                detail::fmt_nu(os, nu, d);
                rep.witness = os.str();
                return rep;
            }
        }
    return rep;
}

// min |<nu-2xi,nu>| / level^2 over 0 < nu, level <= level_cap: the empirical
// lower-bound constant of the coefficient growth estimates.
template <class R>
R spectral_margin_ratio(const ConeTable& cone, const SpectralPoint<R>& xi, int level_cap) {
    R best = std::numeric_limits<R>::infinity();
    const int cap = std::min(level_cap, cone.max_level());
    for (int m = 1; m <= cap; ++m) {
        const R m2 = R(m) * R(m);
        for (const auto& nu : cone.level(m))
            best = std::min(best, std::abs(recurrence_denominator(nu, xi)) / m2);
    }
    return best;
}

enum class LatticePart { All, Positive, Nonpositive };

template <class R>
RegularityReport check_spectral_reg(const SpectralPoint<R>& xi, double eta,
                                    LatticePart part = LatticePart::All) {
    auto dist = [part](const Cplx<R>& z) -> R {
        switch (part) {
            case LatticePart::Positive: return dist_to_positive_integers(z);
            case LatticePart::Nonpositive: return dist_to_nonpositive_integers(z);
            default: return dist_to_integers(z);
        }
    };
    RegularityReport rep;
    rep.margin = std::numeric_limits<double>::infinity();
    const int n = xi.dim();
    auto probe = [&](const Cplx<R>& z, const std::string& what) {
        const double d = double(dist(z));
        if (d < rep.margin) rep.margin = d;
        if (rep.ok && d <= eta) {
            rep.ok = false;
            rep.witness = what + " within eta of the excluded integers";
        }
    };
    for (int j = 0; j < n; ++j) probe(R(2) * xi[j], "2 xi_" + std::to_string(j + 1));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            const std::string jk = std::to_string(j + 1) + std::to_string(k + 1);
            probe(xi[j] + xi[k], "xi_j+xi_k (jk=" + jk + ")");
            probe(xi[j] - xi[k], "xi_j-xi_k (jk=" + jk + ")");
        }
    return rep;
}

}  // namespace toda
