#pragma once

#include "bomol/centers.hpp"

namespace bomol {

struct SecondOrderCoeffs {
    int n = 0;
    double a_n = 0.0;
    double b_n = 0.0;
    double d_n = 0.0;
    double alpha_n = 0.0;  // 2 (a_n + b_n + d_n)
};

// Kinetic-energy correction coefficient, (3/16) beta^2 <z^2>, by Airy quadrature.
double coeff_a(int n);
// (1/4) beta^2 <z^2>; closed form for even n.
double coeff_b(int n);
// Coefficient of the cubic-resolvent term, from <psi| (T - dE) V3 (T - dE) |psi> at
// dimensionless kernel range eps = (m/mu)^{1/3}.
double coeff_d_at(int n, double eps);
// eps -> 0 limit of coeff_d_at (Richardson in eps^2).
double coeff_d(int n);

SecondOrderCoeffs second_order_coeffs(int n);

// -alpha_n nu0^2 (m/mu)^{2/3}
double second_order_energy(const PhysicalParams& p, int n);

// Energy shift from reordering the kinetic operator around the (1 + k0|z|) e^{-k0|z|} kernel.
double ordering_ambiguity_magnitude(const PhysicalParams& p, int n);

// Position-space kernel of (nu0^2 + q^2/2m)^{-power}, power in {1, 2, 3}.
double resolvent_kernel(int power, double nu0_sq, double m, double hbar, double z);

} // namespace bomol
