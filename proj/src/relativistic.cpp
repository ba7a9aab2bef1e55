#include "bomol/relativistic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bomol/errors.hpp"
#include "bomol/quadrature.hpp"
#include "bomol/roots.hpp"
#include "bomol/specfun.hpp"

namespace bomol {

namespace {
constexpr double kPi = std::numbers::pi;
}

void RelParams::validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("relativistic: m must be positive");
    if (!(M > 0.0) || !std::isfinite(M)) throw DomainError("relativistic: M must be positive");
    if (!(lambda > 0.0) || !(lambda < kPi * m))
        throw CouplingOutOfRange("relativistic: lambda = " + std::to_string(lambda) +
                                 " outside (0, pi m)");
}

double arccos_kernel(double mu, double m) {
    if (!(std::fabs(mu) < m)) throw DomainError("arccos_kernel: need |mu| < m");
    const double x = mu / m;
    // acos(-x) = 2 asin(sqrt((1+x)/2)) keeps precision near x = -1
    const double num = 2.0 * std::asin(std::sqrt(0.5 * (1.0 + x)));
    return num / (m * std::sqrt((1.0 - x) * (1.0 + x)));
}

double laplace_k0(double mu, double m) {
    if (!(mu < m) || !(m > 0.0)) throw DomainError("laplace_k0: need mu < m");
    auto f = [mu, m](double t) { return std::exp((mu - m) * t) * bessel_k0_scaled(m * t); };
    QuadOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-13;
    const double t1 = 1.0 / m;
    return integrate(f, 0.0, t1, opt).value + integrate_semi_infinite(f, t1, opt).value;
}

RelBinding solve_mu0(const RelParams& rel) {
    rel.validate();
    // mu0 = -m cos(theta) with theta / sin(theta) = pi m / lambda
    const double r = rel.lambda / (kPi * rel.m);
    auto f = [r](double th) { return r * th - std::sin(th); };
    const double lo = std::acos(r);  // minimum of f; f(0) = 0 is spurious
    const RootResult root = find_root_bracketed(f, lo, kPi, 1e-17);
    const double th = root.root;
    RelBinding b;
    b.mu0 = -rel.m * std::cos(th);
    b.residual = std::fabs(th / (kPi * rel.m * std::sin(th)) - 1.0 / rel.lambda);
    b.slope = effective_slope(rel, b);
    return b;
}

double effective_slope(const RelParams& rel, const RelBinding& b) {
    const double den = b.mu0 + rel.lambda / kPi;
    if (std::fabs(den) < 1e-12 * rel.m)
        throw DegenerateDenominator("effective_slope: mu0 + lambda/pi vanishes");
    return 0.25 * (rel.m - b.mu0) * (rel.m + b.mu0) * rel.lambda / den;
}

double appendix2_integral(double mu, double m, double z) {
    if (!(m > 0.0) || !(mu < m)) throw DomainError("appendix2_integral: need mu < m");
    if (!(z >= 0.0)) throw DomainError("appendix2_integral: z must be non-negative");
    if (z == 0.0) return 0.0;
    auto f = [mu, m, z](double t) {
        const double r = std::hypot(t, z);
        const double a = std::exp(mu * t - m * r) * bessel_k0_scaled(m * r);
        if (t == 0.0) return a;  // excluded by the rules; kept for safety
        const double b = std::exp((mu - m) * t) * bessel_k0_scaled(m * t);
        return a - b;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-13;
    const double t1 = std::max(20.0 * z, 2.0 / m);
    std::vector<double> bp{0.0, z};
    if (4.0 * z < t1) bp.push_back(4.0 * z);
    bp.push_back(t1);
    const double v = integrate(f, bp, opt).value + integrate_semi_infinite(f, t1, opt).value;
    return v / kPi;
}

double mu_exact(const RelParams& rel, double z) {
    if (!(z >= 0.0)) throw DomainError("mu_exact: z must be non-negative");
    const RelBinding b = solve_mu0(rel);
    if (z == 0.0) return b.mu0;
    const double m = rel.m;
    auto phi = [&](double mu) {
        return arccos_kernel(mu, m) / kPi + 0.5 * appendix2_integral(mu, m, z) - 1.0 / rel.lambda;
    };
    const double lo = b.mu0;
    double step = std::max(2.0 * b.slope * z, 1e-14 * m);
    double hi = lo + step;
    const double cap = m * (1.0 - 1e-12);
    for (int i = 0; phi(std::min(hi, cap)) < 0.0; ++i) {
        if (hi >= cap || i > 200)
            throw NumericalError("mu_exact: no bracket below m at z = " + std::to_string(z), hi);
        step *= 2.0;
        hi = lo + step;
    }
    hi = std::min(hi, cap);
    return find_root_bracketed(phi, lo, hi, 1e-15).root;
}

std::vector<AiryLevel> rel_spectrum(const RelParams& rel, int n_levels) {
    const RelBinding b = solve_mu0(rel);
    std::vector<AiryLevel> out;
    for (int n = 0; n < n_levels; ++n) out.push_back(linear_level(b.slope, 0.5 * rel.M, 1.0, n));
    return out;
}

} // namespace bomol
