#pragma once

#include <vector>

#include "bomol/centers.hpp"

namespace bomol {

// One level of -hbar^2/(2 mu) psi'' + s|z| psi = dE psi.
struct AiryLevel {
    int n = 0;
    Parity parity = Parity::even;
    double sigma_n = 0.0;  // Ai'(sigma) = 0 (even) or Ai(sigma) = 0 (odd)
    double deltaE = 0.0;
    double C_n = 0.0;      // psi = C_n sqrt(beta) Ai(beta|z| + sigma_n), times sgn z if odd
    double beta = 0.0;     // (2 mu s / hbar^2)^{1/3}
    double slope = 0.0;
    double mu = 0.0;
    double hbar = 1.0;
};

double sigma(int n);

AiryLevel linear_level(double slope, double mu, double hbar, int n);
AiryLevel level(const PhysicalParams& p, int n);

// Levels 0..count-1, or the first `count` even levels when bosonic.
std::vector<AiryLevel> spectrum(const PhysicalParams& p, int count, bool bosonic = false);

double wavefunction(const AiryLevel& lv, double z);
// d psi / dz away from z = 0; at z = 0 the one-sided limit from z > 0.
double wavefunction_prime(const AiryLevel& lv, double z);

double expect_abs_z(const AiryLevel& lv);
// Closed form for even levels, quadrature for odd ones.
double expect_z2(const AiryLevel& lv);

// 2 C_n^2 int_{sigma_n}^inf (s - sigma_n)^k Ai(s)^2 ds = beta^k <|z|^k>.
double scaled_moment(const AiryLevel& lv, int k);

} // namespace bomol
