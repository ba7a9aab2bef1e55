#pragma once

#include "bomol/quadrature.hpp"

namespace bomol {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Brent's method. Throws DomainError if f(lo), f(hi) do not bracket a root,
// NumericalError when max_iter is exhausted.
RootResult find_root_bracketed(const RealFn& f, double lo, double hi, double tol,
                               int max_iter = 200);

} // namespace bomol
