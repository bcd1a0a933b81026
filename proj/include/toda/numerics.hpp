#pragma once

// Shared numeric kernels: compensated summation, complex log-gamma,
// distances to the integer lattices, binomials, and a deterministic
// uniform generator used by the randomized verification suites.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <algorithm>
#include <random>
#include <vector>

namespace toda {

template <class R>
using Cplx = std::complex<R>;

template <class R>
inline constexpr R pi_v = R(3.14159265358979323846264338327950288L);

// Kahan-compensated accumulator, applied to real and imaginary parts.
template <class R>
struct KahanSum {
    Cplx<R> sum{};
    Cplx<R> comp{};

    void add(const Cplx<R>& value) {
        const Cplx<R> y = value - comp;
        const Cplx<R> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const Cplx<R>& value() const { return sum; }
};

template <class R>
struct KahanSumReal {
    R sum{};
    R comp{};

    void add(R value) {
        const R y = value - comp;
        const R t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// log Gamma(z) by argument shifting into Re z >= 16 followed by the
// Stirling series.  Any branch is acceptable: consumers only ever
// exponentiate sums of log-gamma values, and exp(log_gamma(z)) == Gamma(z)
// holds for every branch choice.  Accurate to ~1e-30 relative past the
// shift threshold, so the long double instantiation stays at full precision.
template <class R>
Cplx<R> log_gamma(Cplx<R> z) {
    // B_{2k} / (2k (2k-1)), k = 1..15
    static const long double stirling_coef[] = {
        1.0L / 12.0L,
        -1.0L / 360.0L,
        1.0L / 1260.0L,
        -1.0L / 1680.0L,
        1.0L / 1188.0L,
        -691.0L / 360360.0L,
        1.0L / 156.0L,
        -3617.0L / 122400.0L,
        43867.0L / 244188.0L,
        -174611.0L / 125400.0L,
        854513.0L / 63756.0L,
        -236364091.0L / 1506960.0L,
        8553103.0L / 3900.0L,
        -23749461029.0L / 657720.0L,
        8615841276005.0L / 12460140.0L,
    };
    const R threshold = R(16);
    Cplx<R> shift_log{};
    while (z.real() < threshold) {
        shift_log += std::log(z);
        z += R(1);
    }
    const Cplx<R> zinv = R(1) / z;
    const Cplx<R> zinv2 = zinv * zinv;
    Cplx<R> series{};
    Cplx<R> power = zinv;
    for (long double c : stirling_coef) {
        series += R(c) * power;
        power *= zinv2;
    }
    const R half_log_two_pi = R(0.918938533204672741780329736405617639L);
    return (z - R(0.5)) * std::log(z) - z + half_log_two_pi + series - shift_log;
}

// Distance from z to the nearest point of Z, Z_{>0}, or Z_{<=0}
// (the nearest lattice point lies on the real axis).
template <class R>
R dist_to_integers(const Cplx<R>& z) {
    const R k = std::round(z.real());
    return std::abs(z - Cplx<R>(k, R(0)));
}

template <class R>
R dist_to_positive_integers(const Cplx<R>& z) {
    R k = std::round(z.real());
    if (k < R(1)) k = R(1);
    return std::abs(z - Cplx<R>(k, R(0)));
}

template <class R>
R dist_to_nonpositive_integers(const Cplx<R>& z) {
    R k = std::round(z.real());
    if (k > R(0)) k = R(0);
    return std::abs(z - Cplx<R>(k, R(0)));
}

// exact for every value that fits a double (the prefix products are
// themselves binomials, so the integer division is exact)
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 62) {
        unsigned long long r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (unsigned long long)(n - k + i) / (unsigned long long)(i);
        return double(r);
    }
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

// Deterministic uniforms independent of the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        return double(eng_() >> 11) * 0x1p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(eng_() % std::uint64_t(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace toda
