#pragma once

#include <vector>

#include "bomol/oscillator.hpp"

namespace bomol {

// hbar = c = 1. Coupling window 0 < lambda < pi m.
struct RelParams {
    double m = 1.0;
    double M = 1000.0;
    double lambda = 2.0;
    void validate() const;  // throws CouplingOutOfRange / DomainError
};

struct RelBinding {
    double mu0 = 0.0;
    double slope = 0.0;
    double residual = 0.0;
};

// arccos(-mu/m) / sqrt(m^2 - mu^2), the closed form of int_0^inf e^{mu t} K0(m t) dt.
double arccos_kernel(double mu, double m);
// Same integral by quadrature.
double laplace_k0(double mu, double m);

RelBinding solve_mu0(const RelParams& rel);
double effective_slope(const RelParams& rel, const RelBinding& b);

// (1/pi) int_0^inf e^{mu t} [K0(m sqrt(t^2+z^2)) - K0(m t)] dt
double appendix2_integral(double mu, double m, double z);

// Full separation-dependent binding energy.
double mu_exact(const RelParams& rel, double z);

std::vector<AiryLevel> rel_spectrum(const RelParams& rel, int n_levels);

} // namespace bomol
