#include "bomol/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "bomol/errors.hpp"

namespace bomol {

RootResult find_root_bracketed(const RealFn& f, double lo, double hi, double tol, int max_iter) {
    if (!(tol > 0.0)) throw DomainError("find_root_bracketed: tol must be positive");
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw DomainError("find_root_bracketed: non-finite value at bracket end");
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0))
        throw DomainError("find_root_bracketed: [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] does not bracket a root");

    const double eps = std::numeric_limits<double>::epsilon();
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 1; it <= max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double xtol = 2.0 * eps * std::fabs(b) + 0.5 * std::numeric_limits<double>::min();
        const double xm = 0.5 * (c - b);
        if (std::fabs(fb) <= tol || std::fabs(xm) <= xtol) return {b, fb, it};

        if (std::fabs(e) >= xtol && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double r = fb / fc;
                const double t = fa / fc;
                p = s * (2.0 * xm * t * (t - r) - (b - a) * (r - 1.0));
                q = (t - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(xtol * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > xtol) ? d : std::copysign(xtol, xm);
        fb = f(b);
        if (!std::isfinite(fb)) throw NumericalError("find_root_bracketed: non-finite f", b);
    }
    throw NumericalError("find_root_bracketed: iteration budget exhausted", b);
}

} // namespace bomol
