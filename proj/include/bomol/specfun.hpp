#pragma once

namespace bomol {

struct AiryPair {
    double ai;
    double aip;
};

// Ai and Ai' together; cheaper than two calls.
AiryPair airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

// k-th negative zero (k >= 1) of Ai and of Ai'.
double airy_zero(int k);
double airy_prime_zero(int k);

// Modified Bessel functions of the second kind, x > 0.
double bessel_k0(double x);
double bessel_k1(double x);
// e^x K0(x), e^x K1(x): for integrands where e^{-x} must be combined with growth.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);
double bessel_kn(int n, double x);
// K_{n+1/2}(x), closed form.
double bessel_k_half(int n, double x);

} // namespace bomol
