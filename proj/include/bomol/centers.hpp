#pragma once

#include <string>

namespace bomol {

// Two heavy particles of mass M, one light particle of mass m, contact coupling lambda.
struct PhysicalParams {
    double m = 1.0;
    double M = 1000.0;
    double lambda = 1.0;
    double hbar = 1.0;

    void validate() const;                 // throws DomainError
    double mu() const { return 0.5 * M; }  // heavy-pair reduced mass
    double kappa0() const { return 2.0 * m * lambda / (hbar * hbar); }
    double kappa_single() const { return m * lambda / (hbar * hbar); }
    double nu0_squared() const { return 2.0 * m * lambda * lambda / (hbar * hbar); }
    // slope of the linearized potential, lambda^3 (2m/hbar^2)^2
    double slope() const;
    double mass_ratio() const { return m / mu(); }
};

enum class Parity { even, odd };

const char* to_string(Parity p);

struct FixedCenterSolution {
    double z = 0.0;
    Parity parity = Parity::even;
    double kappa = 0.0;
    double nu_squared = 0.0;
    double residual = 0.0;
};

// phi(x) = A [exp(-kappa|x - z/2|) + exp(-kappa|x + z/2|)]
struct LightWavefunction {
    double z = 0.0;
    double kappa = 0.0;
    double A = 0.0;
    double operator()(double x) const;
};

double nu0_squared(const PhysicalParams& p);

FixedCenterSolution solve_fixed_centers(const PhysicalParams& p, double z, Parity parity);

// E(z) = -nu^2(z) on the even branch.
double effective_potential_exact(const PhysicalParams& p, double z);
double effective_potential_linear(const PhysicalParams& p, double z);

LightWavefunction light_wavefunction(const PhysicalParams& p, double z);

// Dimensionless even branch: q = 1 + exp(-q zeta), zeta = m lambda z / hbar^2.
double even_branch_q(double zeta);
// dq/dzeta on the even branch.
double even_branch_dq(double zeta);

} // namespace bomol
