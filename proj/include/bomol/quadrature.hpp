#pragma once

#include <functional>
#include <vector>

namespace bomol {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_level = 10;      // step halvings per panel
    int max_depth = 12;      // bisections of a panel that fails to settle
};

// tanh-sinh on a finite interval; endpoint singularities are fine.
QuadratureResult integrate(const RealFn& f, double a, double b, const QuadOptions& opt = {});

// Sum over consecutive panels [p0,p1], [p1,p2], ... (kinks go at the breakpoints).
QuadratureResult integrate(const RealFn& f, const std::vector<double>& breakpoints,
                           const QuadOptions& opt = {});

// exp-sinh on [a, inf).
QuadratureResult integrate_semi_infinite(const RealFn& f, double a, double tol);
QuadratureResult integrate_semi_infinite(const RealFn& f, double a, const QuadOptions& opt);

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

// Fixed rule on [a, b]; smooth in any parameter the integrand depends on.
double integrate_fixed(const RealFn& f, double a, double b, const GaussRule& rule);

} // namespace bomol
