#include "bomol/oscillator.hpp"

#include <cmath>

#include "bomol/errors.hpp"
#include "bomol/quadrature.hpp"
#include "bomol/specfun.hpp"

namespace bomol {

double sigma(int n) {
    if (n < 0) throw DomainError("sigma: level index must be non-negative");
    return (n % 2 == 0) ? airy_prime_zero(n / 2 + 1) : airy_zero((n + 1) / 2);
}

AiryLevel linear_level(double slope, double mu, double hbar, int n) {
    if (!(slope > 0.0) || !(mu > 0.0) || !(hbar > 0.0))
        throw DomainError("linear_level: slope, mass and hbar must be positive");
    AiryLevel lv;
    lv.n = n;
    lv.parity = (n % 2 == 0) ? Parity::even : Parity::odd;
    lv.sigma_n = sigma(n);
    lv.slope = slope;
    lv.mu = mu;
    lv.hbar = hbar;
    lv.beta = std::cbrt(2.0 * mu * slope / (hbar * hbar));
    lv.deltaE = -lv.sigma_n * slope / lv.beta;
    const AiryPair a = airy(lv.sigma_n);
    const double inv2c2 = a.aip * a.aip - lv.sigma_n * a.ai * a.ai;
    lv.C_n = std::sqrt(0.5 / inv2c2);
    return lv;
}

AiryLevel level(const PhysicalParams& p, int n) {
    p.validate();
    return linear_level(p.slope(), p.mu(), p.hbar, n);
}

std::vector<AiryLevel> spectrum(const PhysicalParams& p, int count, bool bosonic) {
    std::vector<AiryLevel> out;
    for (int i = 0; i < count; ++i) out.push_back(level(p, bosonic ? 2 * i : i));
    return out;
}

double wavefunction(const AiryLevel& lv, double z) {
    const double amp = lv.C_n * std::sqrt(lv.beta) * airy_ai(lv.beta * std::fabs(z) + lv.sigma_n);
    if (lv.parity == Parity::even) return amp;
    return z > 0.0 ? amp : (z < 0.0 ? -amp : 0.0);
}

double wavefunction_prime(const AiryLevel& lv, double z) {
    const double d = lv.C_n * std::pow(lv.beta, 1.5) * airy_ai_prime(lv.beta * std::fabs(z) + lv.sigma_n);
    if (lv.parity == Parity::odd) return d;
    return z < 0.0 ? -d : d;
}

double expect_abs_z(const AiryLevel& lv) { return -2.0 * lv.sigma_n / (3.0 * lv.beta); }

double scaled_moment(const AiryLevel& lv, int k) {
    const double s0 = lv.sigma_n;
    auto f = [s0, k](double s) {
        const double a = airy_ai(s);
        return std::pow(s - s0, k) * a * a;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-14;
    const QuadratureResult r = integrate(f, {s0, 0.0, 4.0, 12.0, 40.0}, opt);
    return 2.0 * lv.C_n * lv.C_n * r.value;
}

double expect_z2(const AiryLevel& lv) {
    const double b2 = lv.beta * lv.beta;
    if (lv.parity == Parity::even) {
        const double s = lv.sigma_n;
        return (8.0 / 15.0 * s * s - 1.0 / (5.0 * s)) / b2;
    }
    return scaled_moment(lv, 2) / b2;
}

} // namespace bomol
