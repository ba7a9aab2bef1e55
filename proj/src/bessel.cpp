#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bomol/errors.hpp"
#include "bomol/specfun.hpp"

namespace bomol {

namespace {

struct KPair {
    double k0;
    double k1;
};

void check_arg(double x, const char* who) {
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": argument must be positive");
}

// Power series about 0, x < 2. Unscaled.
KPair small_x(double x) {
    const double gamma = std::numbers::egamma;
    const double y = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    double i0 = 1.0, i1 = 1.0;  // i1 accumulates I1/(x/2)
    double t0 = 1.0, t1 = 1.0;  // y^k/(k!)^2, y^k/(k!(k+1)!)
    double hk = 0.0;            // harmonic number H_k
    double s0 = 0.0;
    double s1 = (-2.0 * gamma + 0.0 + 1.0) * t1;  // k = 0 term of the K1 sum
    for (int k = 1; k < 60; ++k) {
        t0 *= y / (static_cast<double>(k) * k);
        t1 *= y / (static_cast<double>(k) * (k + 1));
        hk += 1.0 / k;
        const double hk1 = hk + 1.0 / (k + 1);
        i0 += t0;
        i1 += t1;
        s0 += t0 * hk;
        s1 += t1 * (-2.0 * gamma + hk + hk1);
        if (t0 < 1e-18 * i0 && t1 < 1e-18 * i1) break;
    }
    const double k0 = -(lg + gamma) * i0 + s0;
    const double k1 = 1.0 / x + lg * (0.5 * x * i1) - 0.25 * x * s1;
    return {k0, k1};
}

// Steed/Temme continued fraction, x >= 2. Returns e^x K0, e^x K1.
KPair large_x_scaled(double x) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) break;
    }
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

} // namespace

double bessel_k0(double x) {
    check_arg(x, "bessel_k0");
    if (x < 2.0) return small_x(x).k0;
    return large_x_scaled(x).k0 * std::exp(-x);
}

double bessel_k1(double x) {
    check_arg(x, "bessel_k1");
    if (x < 2.0) return small_x(x).k1;
    return large_x_scaled(x).k1 * std::exp(-x);
}

double bessel_k0_scaled(double x) {
    check_arg(x, "bessel_k0_scaled");
    if (x < 2.0) return small_x(x).k0 * std::exp(x);
    return large_x_scaled(x).k0;
}

double bessel_k1_scaled(double x) {
    check_arg(x, "bessel_k1_scaled");
    if (x < 2.0) return small_x(x).k1 * std::exp(x);
    return large_x_scaled(x).k1;
}

double bessel_kn(int n, double x) {
    check_arg(x, "bessel_kn");
    if (n < 0) n = -n;
    double km = bessel_k0(x);
    if (n == 0) return km;
    double k = bessel_k1(x);
    for (int j = 1; j < n; ++j) {
        const double kp = km + 2.0 * j / x * k;
        km = k;
        k = kp;
    }
    return k;
}

double bessel_k_half(int n, double x) {
    check_arg(x, "bessel_k_half");
    if (n < 0) n = -n - 1;  // K_{-nu} = K_nu
    // sqrt(pi/2x) e^{-x} sum_k (n+k)! / (k! (n-k)! (2x)^k)
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= n; ++k) {
        term *= static_cast<double>(n + k) * (n - k + 1) / (k * 2.0 * x);
        sum += term;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
}

} // namespace bomol
