#include "bomol/centers.hpp"

#include <cmath>
#include <string>

#include "bomol/errors.hpp"
#include "bomol/roots.hpp"

namespace bomol {

void PhysicalParams::validate() const {
    auto pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError(std::string("parameter ") + name + " must be positive and finite");
    };
    pos(m, "m");
    pos(M, "M");
    pos(lambda, "lambda");
    pos(hbar, "hbar");
}

double PhysicalParams::slope() const {
    const double c = 2.0 * m / (hbar * hbar);
    return lambda * lambda * lambda * c * c;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

double nu0_squared(const PhysicalParams& p) {
    p.validate();
    return p.nu0_squared();
}

namespace {

// Newton polish of q = 1 + s exp(-q zeta), s = +1 even, -1 odd.
double polish(double q, double zeta, double s) {
    for (int i = 0; i < 4; ++i) {
        const double e = std::exp(-q * zeta);
        const double f = q - 1.0 - s * e;
        const double fp = 1.0 + s * zeta * e;
        const double dq = f / fp;
        q -= dq;
        if (std::fabs(dq) <= 1e-17 * q) break;
    }
    return q;
}

double odd_branch_q(double zeta) {
    auto f = [zeta](double q) { return q - 1.0 + std::exp(-q * zeta); };
    // f(0) = 0 is the trivial root; f has its minimum at ln(zeta)/zeta.
    const double qmin = std::log(zeta) / zeta;
    RootResult r = find_root_bracketed(f, qmin, 1.0, 1e-16);
    return polish(r.root, zeta, -1.0);
}

} // namespace

double even_branch_q(double zeta) {
    if (!(zeta >= 0.0)) throw DomainError("even_branch_q: separation must be non-negative");
    if (zeta == 0.0) return 2.0;
    auto f = [zeta](double q) { return q - 1.0 - std::exp(-q * zeta); };
    RootResult r = find_root_bracketed(f, 1.0, 2.0, 1e-16);
    return polish(r.root, zeta, 1.0);
}

double even_branch_dq(double zeta) {
    const double q = even_branch_q(zeta);
    const double e = std::exp(-q * zeta);
    return -q * e / (1.0 + zeta * e);
}

FixedCenterSolution solve_fixed_centers(const PhysicalParams& p, double z, Parity parity) {
    p.validate();
    if (!(z >= 0.0) || !std::isfinite(z))
        throw DomainError("solve_fixed_centers: z must be finite and non-negative");
    const double k1 = p.kappa_single();
    const double zeta = k1 * z;
    double q;
    double s;
    if (parity == Parity::even) {
        q = even_branch_q(zeta);
        s = 1.0;
    } else {
        if (!(zeta > 1.0))
            throw NoOddBoundState("no odd bound state: m*lambda*z/hbar^2 = " + std::to_string(zeta) +
                                  " must exceed 1");
        q = odd_branch_q(zeta);
        s = -1.0;
    }
    FixedCenterSolution sol;
    sol.z = z;
    sol.parity = parity;
    sol.kappa = k1 * q;
    sol.nu_squared = p.hbar * p.hbar * sol.kappa * sol.kappa / (2.0 * p.m);
    sol.residual = k1 * std::fabs(q - 1.0 - s * std::exp(-q * zeta));
    return sol;
}

double effective_potential_exact(const PhysicalParams& p, double z) {
    return -solve_fixed_centers(p, z, Parity::even).nu_squared;
}

double effective_potential_linear(const PhysicalParams& p, double z) {
    p.validate();
    if (!(z >= 0.0)) throw DomainError("effective_potential_linear: z must be non-negative");
    return -p.nu0_squared() + p.slope() * z;
}

double LightWavefunction::operator()(double x) const {
    return A * (std::exp(-kappa * std::fabs(x - 0.5 * z)) + std::exp(-kappa * std::fabs(x + 0.5 * z)));
}

LightWavefunction light_wavefunction(const PhysicalParams& p, double z) {
    const FixedCenterSolution s = solve_fixed_centers(p, z, Parity::even);
    const double kz = s.kappa * z;
    LightWavefunction w;
    w.z = z;
    w.kappa = s.kappa;
    w.A = std::sqrt(s.kappa / (2.0 * (1.0 + (1.0 + kz) * std::exp(-kz))));
    return w;
}

} // namespace bomol
