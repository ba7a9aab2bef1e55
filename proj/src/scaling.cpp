#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "bomol/corrections.hpp"
#include "bomol/errors.hpp"
#include "bomol/oracle.hpp"
#include "bomol/oscillator.hpp"
#include "parallel.hpp"

namespace bomol {

int oracle_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("BO_MOLECULE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = static_cast<int>(std::min<long>(v, 256));
    }
    return std::max(1, n);
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("fit_loglog_slope: need two or more paired samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::fabs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw DomainError("fit_loglog_slope: abscissae are all equal");
    return (n * sxy - sx * sy) / den;
}


ScalingReport scaling_study(const PhysicalParams& base, const std::vector<double>& mass_ratios,
                            int nz) {
    base.validate();
    if (mass_ratios.size() < 4)
        throw DomainError("scaling_study: at least four mass ratios required");
    const auto [lo, hi] = std::minmax_element(mass_ratios.begin(), mass_ratios.end());
    if (!(*lo > 0.0) || *hi < 2.0 * *lo)
        throw DomainError("scaling_study: mass ratios must be positive and span a factor of two");

    const int n = static_cast<int>(mass_ratios.size());
    std::vector<ScalingRow> rows(n);
    detail::parallel_for(n, [&](int i) {
        PhysicalParams p = base;
        p.M = mass_ratios[i] * base.m;
        ScalingRow r;
        r.mass_ratio = mass_ratios[i];
        const ThreeBodyResult tb = solve_3body_2d(p, default_3body_grid(p, nz));
        r.E_exact = tb.energy;
        r.E_coarse = tb.coarse;
        r.E_fine = tb.fine;
        r.deltaE0 = level(p, 0).deltaE;
        r.E_bo1 = -p.nu0_squared() + r.deltaE0;
        r.E_bo2 = r.E_bo1 + second_order_energy(p, 0);
        // extrapolation step must be small next to the residual it is meant to resolve
        r.converged = std::fabs(r.E_exact - r.E_fine) <= 0.1 * std::fabs(r.E_exact - r.E_bo2);
        rows[i] = r;
    });

    ScalingReport rep;
    rep.mass_ratios = mass_ratios;
    rep.rows = rows;
    std::vector<double> x, e1, e2, d0;
    for (const auto& r : rows) {
        PhysicalParams p = base;
        p.M = r.mass_ratio * base.m;
        const double nu0_sq = p.nu0_squared();
        rep.E_exact.push_back(r.E_exact);
        rep.E_bo1.push_back(r.E_bo1);
        rep.E_bo2.push_back(r.E_bo2);
        x.push_back(p.mass_ratio());
        e1.push_back((r.E_exact - r.E_bo1) / nu0_sq);
        e2.push_back((r.E_exact - r.E_bo2) / nu0_sq);
        d0.push_back(r.deltaE0 / nu0_sq);
    }
    rep.fitted_exponents["bo1_error"] = fit_loglog_slope(x, e1);
    rep.fitted_exponents["bo2_error"] = fit_loglog_slope(x, e2);
    rep.fitted_exponents["deltaE0"] = fit_loglog_slope(x, d0);
    return rep;
}

} // namespace bomol
