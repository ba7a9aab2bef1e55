#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "bomol/errors.hpp"
#include "bomol/quadrature.hpp"
#include "bomol/roots.hpp"
#include "bomol/specfun.hpp"

using namespace bomol;

TEST_SUITE("specfun") {

TEST_CASE("Ai at zero against the Gamma-function form") {
    CHECK(airy_ai(0.0) == doctest::Approx(oracle::airy_ai(0.0)).epsilon(1e-14));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(oracle::airy_ai_prime(0.0)).epsilon(1e-14));
    CHECK(airy_ai(0.0) == doctest::Approx(0.355028053887817).epsilon(1e-14));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.258819403792807).epsilon(1e-14));
}

TEST_CASE("Ai and Ai' against Bessel integral representations on [-15, 10]") {
    double worst = 0.0, worst_p = 0.0;
    for (int i = 0; i <= 250; ++i) {
        const double x = -15.0 + 0.1 * i + 0.0123;
        const double o = oracle::airy_ai(x), op = oracle::airy_ai_prime(x);
        // relative on the decaying side, absolute where Ai is small
        const double s = std::fabs(o) < 1e-2 ? 1e-2 : std::fabs(o);
        const double sp = std::fabs(op) < 1e-2 ? 1e-2 : std::fabs(op);
        worst = std::max(worst, std::fabs(airy_ai(x) - o) / (x > 0 ? std::fabs(o) : s));
        worst_p = std::max(worst_p, std::fabs(airy_ai_prime(x) - op) / (x > 0 ? std::fabs(op) : sp));
    }
    CHECK(worst < 1e-12);
    CHECK(worst_p < 1e-12);
}

TEST_CASE("Ai decays and stays positive for large x") {
    CHECK(airy_ai(10.0) > 0.0);
    CHECK(airy_ai(10.0) < 1e-9);
    CHECK(airy_ai(200.0) >= 0.0);
}

TEST_CASE("Ai' matches a central difference of Ai") {
    for (double x : {-7.3, -1.0, 1.0, 4.2}) {
        const double h = 1e-4;
        const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
        CHECK(std::fabs(fd - airy_ai_prime(x)) < 1e-8);
    }
}

TEST_CASE("Airy equation Ai'' = x Ai holds to O(h^2)") {
    for (double x = -12.0; x <= 8.0; x += 0.71) {
        const double h = 1e-3;
        const double d2 = (airy_ai_prime(x + h) - airy_ai_prime(x - h)) / (2 * h);
        CHECK(std::fabs(d2 - x * airy_ai(x)) < 1e-6 * std::max(1.0, std::fabs(x)));
    }
}

TEST_CASE("zeros of Ai and Ai' against bisection on the oracle") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(std::fabs(airy_zero(k) - oracle::kth_negative_zero(oracle::airy_ai, k)) < 1e-11);
        CHECK(std::fabs(airy_prime_zero(k) - oracle::kth_negative_zero(oracle::airy_ai_prime, k)) <
              1e-11);
        CHECK(std::fabs(airy_ai(airy_zero(k))) <= 1e-11);
        CHECK(std::fabs(airy_ai_prime(airy_prime_zero(k))) <= 1e-11);
    }
    CHECK(airy_zero(1) == doctest::Approx(-2.338107410459767).epsilon(1e-13));
    CHECK(airy_prime_zero(1) == doctest::Approx(-1.018792971647471).epsilon(1e-13));
}

TEST_CASE("zeros interlace and decrease") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(airy_prime_zero(k) > airy_zero(k));
        CHECK(airy_zero(k) > airy_prime_zero(k + 1));
        CHECK(airy_zero(k + 1) < airy_zero(k));
    }
    CHECK_THROWS_AS(airy_zero(0), DomainError);
}

TEST_CASE("K0 and K1 against the cosh integrals on [1e-6, 700]") {
    double worst = 0.0;
    for (double x = 1e-6; x <= 700.0; x *= 1.37) {
        worst = std::max(worst, std::fabs(bessel_k0(x) / oracle::bessel_k(0, x) - 1.0));
        worst = std::max(worst, std::fabs(bessel_k1(x) / oracle::bessel_k(1, x) - 1.0));
    }
    CHECK(worst < 1e-12);
    CHECK(bessel_k0(1.0) == doctest::Approx(0.421024438240708).epsilon(1e-14));
    CHECK(bessel_k1(1.0) == doctest::Approx(0.601907230197235).epsilon(1e-14));
}

TEST_CASE("K0 small-argument logarithm and exponential decay") {
    const double x = 1e-8;
    CHECK(std::fabs(bessel_k0(x) - (-std::log(x / 2) - 0.5772156649015329)) < 1e-12);
    CHECK(bessel_k0_scaled(600.0) * std::sqrt(2 * 600.0 / std::numbers::pi) ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("K1 = -K0' and the recurrence K_{n+1} = K_{n-1} + (2n/x) K_n") {
    const double h = 1e-5;
    CHECK(std::fabs(-(bessel_k0(2 + h) - bessel_k0(2 - h)) / (2 * h) - bessel_k1(2.0)) < 1e-8);
    for (double x = 0.1; x <= 50.0; x *= 1.5) {
        CHECK(bessel_kn(2, x) == doctest::Approx(oracle::bessel_k(2, x)).epsilon(1e-12));
        CHECK(oracle::bessel_k(2, x) ==
              doctest::Approx(bessel_k0(x) + 2.0 / x * bessel_k1(x)).epsilon(1e-8));
        const double d = -(bessel_k0(x + x * 1e-5) - bessel_k0(x - x * 1e-5)) / (2e-5 * x);
        CHECK(d == doctest::Approx(bessel_k1(x)).epsilon(1e-8));
    }
}

TEST_CASE("half-integer K in closed form") {
    for (double x : {0.3, 2.0, 9.0}) {
        CHECK(bessel_k_half(0, x) == doctest::Approx(oracle::bessel_k(0.5, x)).epsilon(1e-12));
        CHECK(bessel_k_half(1, x) == doctest::Approx(oracle::bessel_k(1.5, x)).epsilon(1e-12));
    }
}

TEST_CASE("Bessel K rejects non-positive arguments") {
    CHECK_THROWS_AS(bessel_k0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_k1(-1.0), DomainError);
}

} // TEST_SUITE

TEST_SUITE("quadrature") {

TEST_CASE("finite interval with endpoint singularity") {
    auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.abs_error_estimate >= 0.0);
    CHECK(r.evaluations >= 1);
}

TEST_CASE("semi-infinite reference integrals") {
    CHECK(integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0, 1e-12).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_semi_infinite([](double t) { return std::exp(-t * t); }, 0.0, 1e-12).value ==
          doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
    // int K0 = pi/2, from exchanging the cosh representation with the t integral
    CHECK(integrate_semi_infinite([](double t) { return bessel_k0(t); }, 0.0, 1e-12).value ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
}

TEST_CASE("tightening the tolerance stays within the reported error") {
    auto f = [](double t) { return std::exp(-0.3 * t) * bessel_k0(t + 0.01); };
    QuadOptions a, b;
    a.abs_tol = a.rel_tol = 1e-8;
    b.abs_tol = b.rel_tol = 5e-9;
    const auto ra = integrate_semi_infinite(f, 0.0, a);
    const auto rb = integrate_semi_infinite(f, 0.0, b);
    CHECK(std::fabs(ra.value - rb.value) <= std::max(ra.abs_error_estimate, 1e-15));
}

TEST_CASE("non-finite integrand is reported") {
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericalError);
}

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
    const GaussRule g = gauss_legendre(10);
    const double v = integrate_fixed([](double x) { return std::pow(x, 18) + x * x; }, -1.0, 1.0, g);
    CHECK(v == doctest::Approx(2.0 / 19.0 + 2.0 / 3.0).epsilon(1e-14));
}

} // TEST_SUITE

TEST_SUITE("roots") {

TEST_CASE("bracketed roots") {
    auto r = find_root_bracketed([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-14);
    CHECK(std::fabs(r.root - std::sqrt(2.0)) < 1e-12);
    CHECK(std::fabs(r.residual) <= 1e-14);
    r = find_root_bracketed([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-15);
    CHECK(std::fabs(r.root - std::numbers::pi / 2) < 1e-12);
    // fixed point of x = 1 + e^{-x}
    double x = 1.0;
    for (int i = 0; i < 200; ++i) x = 1.0 + std::exp(-x);
    r = find_root_bracketed([](double t) { return t - 1.0 - std::exp(-t); }, 1.0, 2.0, 1e-15);
    CHECK(std::fabs(r.root - x) < 1e-12);
    CHECK(r.root == doctest::Approx(1.27846).epsilon(1e-5));
}

TEST_CASE("invalid bracket is a domain error") {
    CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1; }, -1.0, 1.0, 1e-12),
                    DomainError);
}

} // TEST_SUITE
