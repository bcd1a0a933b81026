#pragma once

// Test-only reference implementations, independent of the library code
// paths they check: a Lanczos log-gamma (the library uses shifted
// Stirling), Bessel K through the I-series reflection (the library uses
// tanh-sinh quadrature), a scalar hyperbolic series written with plain
// loops, and a brute-force scan of the dominant cone.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using C = std::complex<double>;

inline C lanczos_log_gamma(C z) {
    static const double g = 7;
    static const double coef[9] = {0.99999999999980993,     676.5203681218851,
                                   -1259.1392167224028,     771.32342877765313,
                                   -176.61502916214059,     12.507343278686905,
                                   -0.13857109526572012,    9.9843695780195716e-6,
                                   1.5056327351493116e-7};
    const double pi = 3.14159265358979323846;
    if (z.real() < 0.5)
        return std::log(pi / std::sin(pi * z)) - lanczos_log_gamma(1.0 - z);
    z -= 1.0;
    C x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + double(i));
    const C t = z + g + 0.5;
    return 0.91893853320467274178 + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline C lanczos_gamma(const C& z) { return std::exp(lanczos_log_gamma(z)); }

// K_nu(z) = pi/2 (I_{-nu}(z) - I_nu(z)) / sin(pi nu), small-z series route
inline C bessel_I_series(const C& nu, const C& z) {
    const C half_z = z / 2.0;
    C term = std::exp(nu * std::log(half_z) - lanczos_log_gamma(nu + 1.0));
    C sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= half_z * half_z / (double(k) * (nu + double(k)));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

inline C bessel_K_series(const C& nu, const C& z) {
    const double pi = 3.14159265358979323846;
    return pi / 2.0 * (bessel_I_series(-nu, z) - bessel_I_series(nu, z)) /
           std::sin(pi * nu);
}

// scalar hyperbolic series: weights w1 = k1(k1+2k2-1) at shift 1,
// w4 = 4 k2(k2-1) at shift 2; plain loops, no shared code with the library
inline C scalar_hyperbolic_series(const C& xi, double x, const C& k1, const C& k2, int M) {
    const C w1 = k1 * (k1 + 2.0 * k2 - 1.0);
    const C w4 = 4.0 * k2 * (k2 - 1.0);
    std::vector<C> a(size_t(M) + 1);
    a[0] = 1.0;
    for (int m = 1; m <= M; ++m) {
        C s = 0.0;
        for (int l = 1; l <= m; ++l) s += double(l) * w1 * a[size_t(m - l)];
        for (int l = 1; 2 * l <= m; ++l) s += double(l) * w4 * a[size_t(m - 2 * l)];
        a[size_t(m)] = s / (double(m) * double(m) - 2.0 * xi * double(m));
    }
    C sum = 0.0;
    for (int m = M; m >= 0; --m) sum += a[size_t(m)] * std::exp((xi - double(m)) * x);
    return sum;
}

// exhaustive scan for dominant vectors of a given level (n <= 3)
inline std::vector<std::vector<int>> brute_force_level(int n, int m) {
    std::vector<std::vector<int>> out;
    const int L = 2 * m + 1;
    std::vector<int> nu(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            long s = 0;
            int lvl = 0;
            for (int i = 0; i < n; ++i) {
                s += nu[size_t(i)];
                if (s < 0) return;
                lvl += (n - i) * nu[size_t(i)];
            }
            if (lvl == m) out.push_back(nu);
            return;
        }
        for (int v = -L; v <= L; ++v) {
            nu[size_t(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracles
