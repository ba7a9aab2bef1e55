#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bomol/centers.hpp"

namespace bomol {

// 1D: extents = {half width}, steps = {interior points}.
// 2D: extents = {Lz, Ly}, steps = {Nz, Ny}; Ny is derived so that h_y = h_z / 2.
struct GridSpec {
    std::vector<double> extents;
    std::vector<int> steps;
};

struct PointInteraction {
    double position = 0.0;
    double strength = 0.0;  // V = -strength * delta(x - position)
};

struct GridEigenResult {
    std::vector<double> energies;        // Richardson-extrapolated
    std::vector<double> coarse, fine;    // raw values at h and h/2
    double h = 0.0;                      // coarse spacing
};

// Lowest n_levels of -hbar^2/(2 mass) d^2/dx^2 + V on [-L, L], Dirichlet ends,
// node at x = 0, Richardson over h and h/2.
GridEigenResult solve_1d_grid(const std::function<double(double)>& potential, double mass,
                              double hbar, const GridSpec& grid, int n_levels,
                              const std::vector<PointInteraction>& points = {});

GridSpec default_centers_grid(const PhysicalParams& p, double z, int points = 1023);
double solve_fixed_centers_grid(const PhysicalParams& p, double z, const GridSpec& grid);

struct ThreeBodyResult {
    double energy = 0.0;   // Richardson-extrapolated
    double coarse = 0.0;
    double fine = 0.0;
    int nz = 0, ny = 0;    // coarse grid
    long unknowns_fine = 0;
};

struct ThreeBodyOptions {
    bool full_plane = false;       // whole (z, y) plane instead of the symmetric quadrant
    bool richardson = true;
    long max_nodes = 1200L * 600L;
    double shift_factor = 1.05;    // shift = -shift_factor * nu0^2
    double mu_z_override = 0.0;    // > 0 replaces M/2 (used to freeze the heavy motion)
};

GridSpec default_3body_grid(const PhysicalParams& p, int nz = 64);
ThreeBodyResult solve_3body_2d(const PhysicalParams& p, const GridSpec& grid,
                               const ThreeBodyOptions& opt = {});

// Ground eigenvector on a single grid, for symmetry checks; layout [j * ny + k].
struct ThreeBodyState {
    double energy = 0.0;
    int nz = 0, ny = 0;
    double hz = 0.0, hy = 0.0;
    double z0 = 0.0, y0 = 0.0;  // coordinates of node (0, 0)
    std::vector<double> psi;
};
ThreeBodyState solve_3body_state(const PhysicalParams& p, const GridSpec& grid,
                                 const ThreeBodyOptions& opt = {});

// Heavy-pair levels in the full fixed-center potential E(z) + nu0^2, reduced mass M/2.
std::vector<double> bo_spectrum_exact_potential(const PhysicalParams& p, int n_levels,
                                                int points = 4001);

struct ScalingRow {
    double mass_ratio = 0.0;  // M / m
    double E_exact = 0.0;
    double E_coarse = 0.0;
    double E_fine = 0.0;
    double E_bo1 = 0.0;
    double E_bo2 = 0.0;
    double deltaE0 = 0.0;
    bool converged = true;    // grid change small against the BO2 residual
};

struct ScalingReport {
    std::vector<double> mass_ratios;
    std::vector<double> E_exact, E_bo1, E_bo2;
    std::vector<ScalingRow> rows;
    std::map<std::string, double> fitted_exponents;  // bo1_error, bo2_error, deltaE0
};

ScalingReport scaling_study(const PhysicalParams& base, const std::vector<double>& mass_ratios,
                            int nz = 64);

struct Appendix1Row {
    std::string term;
    std::vector<double> values;   // signed, energy units
    std::vector<double> bounds;   // energy units
    double fitted_exponent = 0.0;
    double bound_exponent = 0.0;
    bool vanishes = false;        // identically zero; no exponent
    bool within_bound = true;
};

std::vector<Appendix1Row> appendix1_checks(const PhysicalParams& p, int n,
                                           const std::vector<double>& mass_ratios);

// Least-squares slope of log|y| against log x.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Worker count for independent solves: BO_MOLECULE_THREADS, else hardware concurrency.
int oracle_threads();

} // namespace bomol
