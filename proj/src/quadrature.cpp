#include "bomol/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bomol/errors.hpp"

namespace bomol {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTMax = 4.0;  // e^{-(pi/2) sinh 4} ~ 5e-38 of the half width

double checked(const RealFn& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw NumericalError("quadrature: integrand not finite at x = " + std::to_string(x));
    return y;
}

bool settled(double est, double value, const QuadOptions& opt) {
    return est <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(value));
}

// Sum of w(t) f(x(t)) over t = k h, k odd (or all k when first).
double tanh_sinh_sum(const RealFn& f, double a, double b, double h, bool first, long& evals) {
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    double sum = 0.0;
    if (first) {
        sum += d * kHalfPi * checked(f, c);
        ++evals;
    }
    const int step = first ? 1 : 2;
    const long kmax = static_cast<long>(kTMax / h);
    for (long k = 1; k <= kmax; k += step) {
        const double t = k * h;
        const double u = kHalfPi * std::sinh(t);
        const double e = std::exp(-2.0 * u);
        const double delta = d * 2.0 * e / (1.0 + e);  // distance to the nearer endpoint
        const double w = d * kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (w == 0.0) break;
        const double xl = a + delta;
        const double xr = b - delta;
        if (xl > a) {
            sum += w * checked(f, xl);
            ++evals;
        }
        if (xr < b) {
            sum += w * checked(f, xr);
            ++evals;
        }
    }
    return sum;
}

QuadratureResult tanh_sinh_panel(const RealFn& f, double a, double b, const QuadOptions& opt,
                                 bool& ok) {
    QuadratureResult r;
    double h = 1.0;
    double sum = tanh_sinh_sum(f, a, b, h, true, r.evaluations);
    double prev = sum * h;
    ok = false;
    for (int level = 1; level <= opt.max_level; ++level) {
        h *= 0.5;
        sum += tanh_sinh_sum(f, a, b, h, false, r.evaluations);
        const double cur = sum * h;
        r.value = cur;
        r.abs_error_estimate = std::fabs(cur - prev);
        if (level >= 3 && settled(r.abs_error_estimate, cur, opt)) {
            ok = true;
            return r;
        }
        prev = cur;
    }
    return r;
}

QuadratureResult adaptive(const RealFn& f, double a, double b, const QuadOptions& opt, int depth) {
    bool ok = false;
    QuadratureResult r = tanh_sinh_panel(f, a, b, opt, ok);
    if (ok) return r;
    if (depth >= opt.max_depth)
        throw NumericalError("integrate: no convergence on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]",
                             r.value);
    QuadOptions sub = opt;
    sub.abs_tol = 0.5 * opt.abs_tol;
    const double mid = 0.5 * (a + b);
    QuadratureResult left = adaptive(f, a, mid, sub, depth + 1);
    QuadratureResult right = adaptive(f, mid, b, sub, depth + 1);
    return {left.value + right.value, left.abs_error_estimate + right.abs_error_estimate,
            r.evaluations + left.evaluations + right.evaluations};
}

} // namespace

QuadratureResult integrate(const RealFn& f, double a, double b, const QuadOptions& opt) {
    if (!(std::isfinite(a) && std::isfinite(b))) throw DomainError("integrate: infinite limit");
    if (a == b) return {0.0, 0.0, 1};
    if (b < a) {
        QuadratureResult r = integrate(f, b, a, opt);
        r.value = -r.value;
        return r;
    }
    return adaptive(f, a, b, opt, 0);
}

QuadratureResult integrate(const RealFn& f, const std::vector<double>& breakpoints,
                           const QuadOptions& opt) {
    QuadratureResult total;
    total.evaluations = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] <= breakpoints[i]) continue;
        QuadratureResult r = integrate(f, breakpoints[i], breakpoints[i + 1], opt);
        total.value += r.value;
        total.abs_error_estimate += r.abs_error_estimate;
        total.evaluations += r.evaluations;
    }
    if (total.evaluations == 0) total.evaluations = 1;
    return total;
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double a, const QuadOptions& opt) {
    if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: lower limit not finite");
    QuadratureResult r;
    auto term = [&](double t) {
        const double s = kHalfPi * std::sinh(t);
        const double ex = std::exp(s);
        const double x = a + ex;
        if (!std::isfinite(x) || x == a) return 0.0;
        const double w = kHalfPi * std::cosh(t) * ex;
        ++r.evaluations;
        const double y = f(x);
        if (!std::isfinite(y))
            throw NumericalError("integrate_semi_infinite: integrand not finite at x = " +
                                 std::to_string(x));
        return y == 0.0 ? 0.0 : w * y;
    };
    double h = 1.0;
    double sum = term(0.0);
    for (long k = 1; k <= static_cast<long>(kTMax); ++k) sum += term(k * h) + term(-k * h);
    double prev = sum * h;
    for (int level = 1; level <= opt.max_level + 2; ++level) {
        h *= 0.5;
        const long kmax = static_cast<long>(kTMax / h);
        for (long k = 1; k <= kmax; k += 2) sum += term(k * h) + term(-k * h);
        const double cur = sum * h;
        r.value = cur;
        r.abs_error_estimate = std::fabs(cur - prev);
        if (level >= 3 && settled(r.abs_error_estimate, cur, opt)) return r;
        prev = cur;
    }
    throw NumericalError("integrate_semi_infinite: no convergence", r.value);
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double a, double tol) {
    if (!(tol > 0.0)) throw DomainError("integrate_semi_infinite: tol must be positive");
    QuadOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = 0.0;
    return integrate_semi_infinite(f, a, opt);
}

} // namespace bomol

namespace bomol {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    GaussRule g;
    g.nodes.resize(n);
    g.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        g.nodes[i] = -x;
        g.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        g.weights[i] = g.weights[n - 1 - i] = w;
    }
    return g;
}

double integrate_fixed(const RealFn& f, double a, double b, const GaussRule& rule) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
    return s * h;
}

} // namespace bomol
