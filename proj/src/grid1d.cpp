#include <algorithm>
#include <cmath>
#include <limits>

#include "bomol/centers.hpp"
#include "bomol/errors.hpp"
#include "bomol/oracle.hpp"

namespace bomol {

namespace {

struct Tridiag {
    std::vector<double> d;
    double off = 0.0;  // constant off-diagonal
};

// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
int sturm_count(const Tridiag& t, double x) {
    const double off2 = t.off * t.off;
    const double tiny = std::numeric_limits<double>::min() * 1e10;
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.d.size(); ++i) {
        q = t.d[i] - x - (i == 0 ? 0.0 : off2 / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const Tridiag& t, int n_levels) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : t.d) {
        lo = std::min(lo, v - 2.0 * std::fabs(t.off));
        hi = std::max(hi, v + 2.0 * std::fabs(t.off));
    }
    std::vector<double> out;
    for (int k = 0; k < n_levels; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            if (sturm_count(t, mid) > k) b = mid; else a = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

std::vector<double> solve_once(const std::function<double(double)>& potential, double mass,
                               double hbar, double L, int n_points, int n_levels,
                               const std::vector<PointInteraction>& points) {
    const double h = 2.0 * L / (n_points + 1);
    const double c = hbar * hbar / (2.0 * mass);
    const int mid = n_points / 2;
    Tridiag t;
    t.off = -c / (h * h);
    t.d.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double x = (i - mid) * h;
        t.d[i] = 2.0 * c / (h * h) + potential(x);
        if (!std::isfinite(t.d[i]))
            throw NumericalError("solve_1d_grid: potential is not finite at x = " +
                                 std::to_string(x));
    }
    for (const auto& pi : points) {
        const double s = pi.position / h;
        const double r = std::round(s);
        if (std::fabs(s - r) > 1e-9 * std::max(1.0, std::fabs(s)))
            throw GridAlignmentError("solve_1d_grid: point interaction at x = " +
                                     std::to_string(pi.position) + " is not on a grid node");
        const int i = mid + static_cast<int>(r);
        if (i < 0 || i >= n_points)
            throw GridAlignmentError("solve_1d_grid: point interaction outside the grid");
        t.d[i] -= pi.strength / h;
    }
    return lowest_eigenvalues(t, n_levels);
}

} // namespace

GridEigenResult solve_1d_grid(const std::function<double(double)>& potential, double mass,
                              double hbar, const GridSpec& grid, int n_levels,
                              const std::vector<PointInteraction>& points) {
    if (grid.extents.empty() || grid.steps.empty())
        throw DomainError("solve_1d_grid: grid needs one extent and one step count");
    const double L = grid.extents[0];
    const int n = grid.steps[0];
    if (!(L > 0.0)) throw DomainError("solve_1d_grid: extent must be positive");
    if (n < 64) throw DomainError("solve_1d_grid: at least 64 points required");
    if (n % 2 == 0) throw GridAlignmentError("solve_1d_grid: point count must be odd (node at 0)");
    if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("solve_1d_grid: mass and hbar > 0");
    if (n_levels < 1 || n_levels >= n) throw DomainError("solve_1d_grid: bad level count");

    GridEigenResult r;
    r.h = 2.0 * L / (n + 1);
    r.coarse = solve_once(potential, mass, hbar, L, n, n_levels, points);
    r.fine = solve_once(potential, mass, hbar, L, 2 * n + 1, n_levels, points);
    for (int k = 0; k < n_levels; ++k) r.energies.push_back((4.0 * r.fine[k] - r.coarse[k]) / 3.0);
    return r;
}

GridSpec default_centers_grid(const PhysicalParams& p, double z, int points) {
    p.validate();
    if (points % 2 == 0) ++points;
    const double half = 0.5 * std::fabs(z);
    const double L0 = half + 20.0 / p.kappa_single();
    double h = 2.0 * L0 / (points + 1);
    if (half > 0.0) h = half / std::ceil(half / h);
    return GridSpec{{0.5 * (points + 1) * h}, {points}};
}

double solve_fixed_centers_grid(const PhysicalParams& p, double z, const GridSpec& grid) {
    p.validate();
    const double half = 0.5 * std::fabs(z);
    std::vector<PointInteraction> pts;
    if (half == 0.0) {
        pts.push_back({0.0, 2.0 * p.lambda});
    } else {
        pts.push_back({-half, p.lambda});
        pts.push_back({half, p.lambda});
    }
    auto zero = [](double) { return 0.0; };
    return solve_1d_grid(zero, p.m, p.hbar, grid, 1, pts).energies[0];
}

} // namespace bomol

#include "bomol/oscillator.hpp"

namespace bomol {

std::vector<double> bo_spectrum_exact_potential(const PhysicalParams& p, int n_levels, int points) {
    p.validate();
    if (n_levels < 1) throw DomainError("bo_spectrum_exact_potential: n_levels must be >= 1");
    const AiryLevel top = level(p, n_levels);
    const double L = (-top.sigma_n + 14.0) / top.beta;
    const double nu0_sq = p.nu0_squared();
    auto V = [&p, nu0_sq](double z) { return effective_potential_exact(p, std::fabs(z)) + nu0_sq; };
    if (points % 2 == 0) ++points;
    return solve_1d_grid(V, p.mu(), p.hbar, GridSpec{{L}, {points}}, n_levels).energies;
}

} // namespace bomol
