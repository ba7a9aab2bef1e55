#include "bomol/corrections.hpp"

#include <cmath>

#include "bomol/errors.hpp"
#include "bomol/oscillator.hpp"
#include "bomol/quadrature.hpp"

namespace bomol {

namespace {

AiryLevel unit_level(int n) { return linear_level(1.0, 0.5, 1.0, n); }

// Integrate an even function of z against psi_n^2 on the half line, doubled.
double expect_even(const AiryLevel& lv, const RealFn& g) {
    auto f = [&](double z) {
        const double w = wavefunction(lv, z);
        return w * w * g(z);
    };
    const double s = -lv.sigma_n / lv.beta;
    const double b = 1.0 / lv.beta;
    QuadOptions opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-14;
    return 2.0 * integrate(f, {0.0, s, s + 4.0 * b, s + 12.0 * b, s + 40.0 * b}, opt).value;
}

} // namespace

double coeff_a(int n) { return 3.0 / 16.0 * scaled_moment(unit_level(n), 2); }

double coeff_b(int n) {
    const AiryLevel lv = unit_level(n);
    return 0.25 * expect_z2(lv) * lv.beta * lv.beta;
}

double resolvent_kernel(int power, double nu0_sq, double m, double hbar, double z) {
    const double nu0 = std::sqrt(nu0_sq);
    const double u = std::sqrt(2.0 * m) * nu0 * std::fabs(z) / hbar;
    const double e = std::exp(-u);
    const double c = std::sqrt(2.0 * m) / hbar;
    switch (power) {
    case 1: return c / (2.0 * nu0) * e;
    case 2: return c / (4.0 * nu0 * nu0_sq) * (1.0 + u) * e;
    case 3: return c / (16.0 * nu0 * nu0_sq * nu0_sq) * (3.0 + 3.0 * u + u * u) * e;
    default: throw DomainError("resolvent_kernel: power must be 1, 2 or 3");
    }
}

double coeff_d_at(int n, double eps) {
    if (!(eps > 0.0)) throw DomainError("coeff_d_at: eps must be positive");
    // m = lambda = hbar = 1, so nu0^2 = 2, kappa0 = 2, slope g = 4, and mu = 1/eps^3.
    const double nu0_sq = 2.0;
    const double g = 4.0;
    const double mu = 1.0 / (eps * eps * eps);
    const AiryLevel lv = linear_level(g, mu, 1.0, n);
    // (T - dE) psi = -g|z| psi, so the symmetric product reduces to g^2 <z^2 V3>.
    const double v = expect_even(lv, [&](double z) {
        return g * g * z * z * resolvent_kernel(3, nu0_sq, 1.0, 1.0, z);
    });
    return std::sqrt(nu0_sq / 2.0) * std::pow(mu, 2.0 / 3.0) * v;
}

double coeff_d(int n) {
    const double e0 = 4e-3;
    const double d1 = coeff_d_at(n, e0);
    const double d2 = coeff_d_at(n, 0.5 * e0);
    const double d3 = coeff_d_at(n, 0.25 * e0);
    const double r12 = (4.0 * d2 - d1) / 3.0;
    const double r23 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r23 - r12) / 15.0;
}

SecondOrderCoeffs second_order_coeffs(int n) {
    SecondOrderCoeffs c;
    c.n = n;
    c.a_n = coeff_a(n);
    c.b_n = coeff_b(n);
    c.d_n = coeff_d(n);
    c.alpha_n = 2.0 * (c.a_n + c.b_n + c.d_n);
    return c;
}

double second_order_energy(const PhysicalParams& p, int n) {
    p.validate();
    const SecondOrderCoeffs c = second_order_coeffs(n);
    return -c.alpha_n * p.nu0_squared() * std::pow(p.mass_ratio(), 2.0 / 3.0);
}

double ordering_ambiguity_magnitude(const PhysicalParams& p, int n) {
    const AiryLevel lv = level(p, n);
    const double k0 = p.kappa0();
    // second derivative of (1 + k0|z|) e^{-k0|z|} is k0^2 (k0|z| - 1) e^{-k0|z|}
    const double w2 = expect_even(lv, [k0](double z) {
        const double u = k0 * std::fabs(z);
        return k0 * k0 * (u - 1.0) * std::exp(-u);
    });
    return std::fabs(0.25 * p.hbar * p.hbar / (2.0 * p.mu()) * w2);
}

} // namespace bomol
