#pragma once

// Reference evaluations used only by the tests. Nothing here calls into the library, so a
// shared bug cannot hide on both sides of a comparison.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

struct Rule {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes from the three-term recurrence and Newton steps.
inline Rule legendre_rule(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
        double d = 1.0;
        for (int it = 0; it < 60; ++it) {
            double a = 1.0, b = x;
            for (int k = 2; k <= n; ++k) {
                const double c = ((2 * k - 1) * x * b - (k - 1) * a) / k;
                a = b;
                b = c;
            }
            d = n * (a - x * b) / (1.0 - x * x);
            const double step = b / d;
            x -= step;
            if (std::fabs(step) < 1e-17) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * d * d);
    }
    return r;
}

// Composite Gauss-Legendre with `panels` equal pieces.
inline double gl(const std::function<double(double)>& f, double a, double b, int panels = 16,
                 int order = 32) {
    static thread_local Rule cache;
    if (static_cast<int>(cache.x.size()) != order) cache = legendre_rule(order);
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        double ps = 0.0;
        for (int i = 0; i < order; ++i) ps += cache.w[i] * f(c + 0.5 * h * cache.x[i]);
        s += 0.5 * h * ps;
    }
    return s;
}

// Lanczos approximation (g = 7, n = 9) for Gamma(x), x > 0.5.
inline double gamma(double x) {
    static const double c[] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                               771.32342877765313,   -176.61502916214059, 12.507343278686905,
                               -0.13857109526572012, 9.9843695780195716e-6,
                               1.5056327351493116e-7};
    if (x < 0.5) return pi / (std::sin(pi * x) * gamma(1.0 - x));
    x -= 1.0;
    double a = c[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
    return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt; returned as exp(x) K_nu(x).
inline double bessel_k_scaled(double nu, double x) {
    const double tmax = std::acosh(1.0 + 745.0 / x);
    auto f = [nu, x](double t) {
        return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    };
    // the integrand falls off fastest near tmax; graded panels
    double s = 0.0;
    double a = 0.0;
    for (double b : {0.25 * tmax, 0.5 * tmax, tmax}) {
        s += gl(f, a, b, 24, 32);
        a = b;
    }
    return s;
}

inline double bessel_k(double nu, double x) { return std::exp(-x) * bessel_k_scaled(nu, x); }

// J_nu(x) for x > 0 from the Schlaefli integral.
inline double bessel_j(double nu, double x) {
    const double a = gl([nu, x](double th) { return std::cos(nu * th - x * std::sin(th)); }, 0.0,
                        pi, 64, 32) / pi;
    if (std::fabs(std::sin(nu * pi)) < 1e-300) return a;
    // e^{-x sinh t - nu t} decays at least like e^{-x sinh t}; 0.1 < |nu| < 1 here
    double tmax = 1.0;
    while (x * std::sinh(tmax) + nu * tmax < 745.0) tmax *= 1.5;
    auto g = [nu, x](double t) { return std::exp(-x * std::sinh(t) - nu * t); };
    const double b = gl(g, 0.0, 1.0, 32, 32) + gl(g, 1.0, tmax, 64, 32);
    return a - std::sin(nu * pi) / pi * b;
}

inline double airy_ai(double x) {
    if (x == 0.0) return 1.0 / (std::pow(3.0, 2.0 / 3.0) * gamma(2.0 / 3.0));
    if (x > 0.0) {
        const double z = 2.0 / 3.0 * std::pow(x, 1.5);
        return std::sqrt(x / 3.0) / pi * bessel_k(1.0 / 3.0, z);
    }
    const double r = -x;
    const double z = 2.0 / 3.0 * std::pow(r, 1.5);
    return std::sqrt(r) / 3.0 * (bessel_j(1.0 / 3.0, z) + bessel_j(-1.0 / 3.0, z));
}

inline double airy_ai_prime(double x) {
    if (x == 0.0) return -1.0 / (std::pow(3.0, 1.0 / 3.0) * gamma(1.0 / 3.0));
    if (x > 0.0) {
        const double z = 2.0 / 3.0 * std::pow(x, 1.5);
        return -x / (pi * std::sqrt(3.0)) * bessel_k(2.0 / 3.0, z);
    }
    const double r = -x;
    const double z = 2.0 / 3.0 * std::pow(r, 1.5);
    return r / 3.0 * (bessel_j(2.0 / 3.0, z) - bessel_j(-2.0 / 3.0, z));
}

// Root of f in [a, b] by plain bisection.
inline double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// k-th zero of g scanning leftwards from 0 in steps of 0.05, then bisection.
inline double kth_negative_zero(const std::function<double(double)>& g, int k) {
    double x = 0.0, gx = g(x);
    int found = 0;
    while (true) {
        const double y = x - 0.05, gy = g(y);
        if ((gy < 0) != (gx < 0) && ++found == k) return bisect(g, y, x);
        x = y;
        gx = gy;
    }
}

} // namespace oracle
