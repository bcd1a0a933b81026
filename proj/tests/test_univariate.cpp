#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "toda/numerics.hpp"
#include "toda/univariate.hpp"

using namespace toda;
using C = std::complex<double>;

TEST_CASE("1F1 closed forms") {
    CHECK(kummer_1f1(KummerParams<double>{C(0.8, -0.3), C(1.0, -0.6), C(0, 0)}) == C(1, 0));
    // 1F1(a,a,z) = e^z
    const C z(0.45, 0.2);
    const auto ea = kummer_1f1(KummerParams<double>{C(0.7, 0.1), C(0.7, 0.1), z});
    CHECK(std::abs(ea - std::exp(z)) <= 1e-14 * std::abs(std::exp(z)));
    // 1F1(1,2,z) = (e^z - 1)/z at z = 0.37 (frozen)
    const auto e12 = kummer_1f1(KummerParams<double>{C(1, 0), C(2, 0), C(0.37, 0)});
    CHECK(std::abs(e12 - C(1.2100935531441201664452765824844, 0)) < 1e-14);
    // frozen generic complex point
    const auto gen = kummer_1f1(KummerParams<double>{C(0.8, -0.3), C(1.0, -0.6), C(0.45, 0)});
    CHECK(std::abs(gen - C(1.3952146856019280736460562673465, 0.0831563355243764104826883152233)) <
          1e-13);
}

TEST_CASE("1F1 Kummer transformation 1F1(a,b,z) = e^z 1F1(b-a,b,-z)") {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        const C a(rng.uniform(-1.5, 2.5), rng.uniform(-1, 1));
        const C b(rng.uniform(0.3, 3.0), rng.uniform(0.2, 1.2));
        const C z(rng.uniform(-0.8, 0.8), rng.uniform(-0.5, 0.5));
        const auto lhs = kummer_1f1(KummerParams<double>{a, b, z});
        const auto rhs = std::exp(z) * kummer_1f1(KummerParams<double>{b - a, b, -z});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("1F1 parameter pole is refused") {
    CHECK_THROWS_AS(kummer_1f1(KummerParams<double>{C(1, 0), C(-2.0, 0), C(0.5, 0)}),
                    ParameterPole);
}

TEST_CASE("phi closed form: frozen value and asymptotics") {
    // frozen 50-digit phi_{0.3i}(1; 1.5)
    const auto v = whittaker_M_phi(C(0, 0.3), C(1, 0), C(1.5, 0));
    CHECK(std::abs(v - C(1.3065412009792030094372640522786, 0.7149655793654424025689211332484)) <
          1e-14);
    // plane-wave behavior at large x for Re xi = 0
    const C xi(0, 0.4);
    CHECK(std::abs(whittaker_M_phi(xi, C(30, 0), C(0.9, 0)) - std::exp(xi * 30.0)) < 1e-6);
    // 2 xi on the excluded positive integers
    CHECK_THROWS_AS(whittaker_M_phi(C(0.5, 0), C(1, 0), C(0, 0)), ParameterPole);
    // boundary probe: g=0, xi = 1/2 - delta stays finite as delta -> 0
    double prev = std::numeric_limits<double>::infinity();
    for (double delta : {1e-2, 1e-3, 1e-4}) {
        const auto f = whittaker_M_phi(C(0.5 - delta, 0), C(1, 0), C(0, 0));
        CHECK(std::isfinite(f.real()));
        const double drift = std::abs(f - whittaker_M_phi(C(0.5 - 2 * delta, 0), C(1, 0), C(0, 0)));
        CHECK(drift < prev);
        prev = drift;
    }
}

TEST_CASE("class-one function: symmetry and frozen value") {
    const auto a = whittaker_W_Phi(C(0.3, 0), C(1, 0), C(0.7, 0));
    CHECK(std::abs(a - C(0.88884154469079795903721388255473, 0)) < 1e-13);
    // Phi_{-xi} = Phi_xi
    const C xi(0.27, 0.33);
    const auto p = whittaker_W_Phi(xi, C(1.2, 0), C(0.4, 0));
    const auto m = whittaker_W_Phi(-xi, C(1.2, 0), C(0.4, 0));
    CHECK(std::abs(p - m) <= 1e-13 * std::abs(p));
    CHECK_THROWS_AS(whittaker_W_Phi(C(1.0, 0), C(1, 0), C(0, 0)), ParameterPole);
}

TEST_CASE("Bessel K quadrature: closed forms and symmetry") {
    // K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
    for (double z : {0.5, 1.0, 2.0}) {
        const auto got = bessel_K_quad(C(0.5, 0), C(z, 0));
        const double want = std::sqrt(pi_v<double> / (2 * z)) * std::exp(-z);
        CHECK(std::abs(got - C(want, 0)) <= 1e-12 * want);
    }
    // K_nu = K_{-nu}
    const auto kp = bessel_K_quad(C(0.3, 0.2), C(1.1, 0));
    const auto km = bessel_K_quad(C(-0.3, -0.2), C(1.1, 0));
    CHECK(std::abs(kp - km) <= 1e-12 * std::abs(kp));
    CHECK_THROWS_AS(bessel_K_quad(C(0.3, 0), C(-1.0, 0)), DomainError);
}

TEST_CASE("Bessel K against the frozen value and the series cross-method") {
    // frozen 50-digit K_{0.3}(1)
    const auto q = bessel_K_quad(C(0.3, 0), C(1.0, 0));
    CHECK(std::abs(q - C(0.43507602420880202434836119420093, 0)) < 1e-13);
    // independent small-z route through the I-series reflection
    const auto s = oracles::bessel_K_series(C(0.3, 0), C(1.0, 0));
    CHECK(std::abs(q - s) <= 1e-11 * std::abs(q));
    for (double z : {0.2, 0.7, 1.6}) {
        const auto a = bessel_K_quad(C(0.15, 0), C(z, 0));
        const auto b = oracles::bessel_K_series(C(0.15, 0), C(z, 0));
        CHECK(std::abs(a - b) <= 1e-11 * std::abs(a));
    }
}

TEST_CASE("one-variable difference equation residual") {
    for (double xi : {0.22, 0.31, 0.44}) {
        for (double g : {0.3, 0.8, 1.4}) {
            for (double x : {0.6, 1.3, 2.4}) {
                CHECK(univariate_dde_residual(C(xi, 0), C(x, 0), C(g, 0)) <= 1e-10);
            }
        }
    }
    // complex spectral parameter as well
    CHECK(univariate_dde_residual(C(0.21, 0.4), C(1.0, 0), C(0.6, 0)) <= 1e-10);
}

TEST_CASE("g=0 reduces to the Bessel recurrence") {
    const C xi(0.3, 0), x(1.0, 0);
    const double general = univariate_dde_residual(xi, x, C(0, 0));
    const C Phi = whittaker_W_Phi(xi, x, C(0, 0));
    const C Phip = whittaker_W_Phi(xi + 1.0, x, C(0, 0));
    const C Phim = whittaker_W_Phi(xi - 1.0, x, C(0, 0));
    const C rhs = std::exp(x) * Phi;
    const double bessel_form = std::abs((Phip - Phim) / (4.0 * xi) - rhs) / std::abs(rhs);
    CHECK(general <= 1e-10);
    CHECK(bessel_form <= 1e-10);
    CHECK(std::abs(general - bessel_form) <= 1e-10);
}
