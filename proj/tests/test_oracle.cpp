#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "bomol/centers.hpp"
#include "bomol/corrections.hpp"
#include "bomol/errors.hpp"
#include "bomol/oracle.hpp"
#include "bomol/oscillator.hpp"

using namespace bomol;

TEST_SUITE("oracle") {

TEST_CASE("1D grid: harmonic oscillator") {
    const auto r = solve_1d_grid([](double x) { return 0.5 * x * x; }, 1.0, 1.0,
                                 GridSpec{{12.0}, {1023}}, 3);
    for (int n = 0; n < 3; ++n) CHECK(std::fabs(r.energies[n] - (n + 0.5)) < 1e-6);
}

TEST_CASE("1D grid: single contact well") {
    const auto r = solve_1d_grid([](double) { return 0.0; }, 1.0, 1.0, GridSpec{{20.0}, {1023}},
                                 1, {{0.0, 1.0}});
    CHECK(std::fabs(r.energies[0] + 0.5) < 1e-3);
}

TEST_CASE("1D grid: halving h shrinks the change") {
    auto V = [](double x) { return 0.5 * x * x + 0.1 * x * x * x * x; };
    const auto a = solve_1d_grid(V, 1.0, 1.0, GridSpec{{8.0}, {255}}, 2);
    const auto b = solve_1d_grid(V, 1.0, 1.0, GridSpec{{8.0}, {511}}, 2);
    for (int n = 0; n < 2; ++n) {
        CHECK(a.fine[n] == b.coarse[n]);
        CHECK(std::fabs(b.fine[n] - b.coarse[n]) < std::fabs(a.fine[n] - a.coarse[n]));
        CHECK(std::fabs(b.energies[n] - a.energies[n]) < std::fabs(b.fine[n] - b.coarse[n]));
    }
}

TEST_CASE("1D grid: argument checks") {
    auto zero = [](double) { return 0.0; };
    CHECK_THROWS_AS(solve_1d_grid(zero, 1, 1, GridSpec{{5.0}, {32}}, 1), DomainError);
    CHECK_THROWS_AS(solve_1d_grid(zero, 1, 1, GridSpec{{5.0}, {100}}, 1), GridAlignmentError);
    CHECK_THROWS_AS(solve_1d_grid(zero, 1, 1, GridSpec{{5.0}, {101}}, 1, {{0.0123, 1.0}}),
                    GridAlignmentError);
}

TEST_CASE("fixed centers on the grid") {
    PhysicalParams p;
    for (double z : {0.0, 1.0, 50.0}) {
        const double e = solve_fixed_centers_grid(p, z, default_centers_grid(p, z));
        CHECK(std::fabs(e / effective_potential_exact(p, z) - 1.0) < 1e-3);
    }
    CHECK(std::fabs(solve_fixed_centers_grid(p, 0.0, default_centers_grid(p, 0.0)) + 2.0) < 2e-3);
    CHECK(std::fabs(solve_fixed_centers_grid(p, 1.0, default_centers_grid(p, 1.0)) + 0.81723) <
          1e-3);
    CHECK(std::fabs(solve_fixed_centers_grid(p, 50.0, default_centers_grid(p, 50.0)) + 0.5) <
          1e-3);
    CHECK_THROWS_AS(solve_fixed_centers_grid(p, 1.0, GridSpec{{20.0}, {1001}}),
                    GridAlignmentError);
}

TEST_CASE("3-body grid at M = 100 lies between the clamped limit and first order") {
    PhysicalParams p;
    p.M = 100;
    const ThreeBodyResult r = solve_3body_2d(p, default_3body_grid(p, 64));
    const double bo1 = -p.nu0_squared() + level(p, 0).deltaE;
    const double bo2 = bo1 + second_order_energy(p, 0);
    CHECK(r.energy > -2.0);
    CHECK(r.energy < bo1);
    CHECK(std::fabs(r.energy - bo2) < std::fabs(r.energy - bo1));
    // extrapolation step is small next to the residual
    CHECK(std::fabs(r.energy - r.fine) < 0.1 * std::fabs(r.energy - bo2));
}

TEST_CASE("quadrant reduction equals the full plane; ground state is even in z") {
    PhysicalParams p;
    p.M = 100;
    const GridSpec g = default_3body_grid(p, 64);
    ThreeBodyOptions quad, full;
    quad.richardson = full.richardson = false;
    full.full_plane = true;
    const ThreeBodyResult rq = solve_3body_2d(p, g, quad);
    const ThreeBodyState s = solve_3body_state(p, g, full);
    CHECK(std::fabs(rq.energy - s.energy) < 1e-9 * std::fabs(rq.energy));
    double worst = 0.0;
    for (int j = 0; j < s.nz; ++j)
        for (int k = 0; k < s.ny; ++k) {
            const double a = s.psi[static_cast<std::size_t>(j) * s.ny + k];
            const double b = s.psi[static_cast<std::size_t>(s.nz - 1 - j) * s.ny + k];
            worst = std::max(worst, std::fabs(a - b));
        }
    CHECK(worst <= 1e-6);
}

TEST_CASE("frozen heavy motion reproduces the fixed-center column") {
    PhysicalParams p;
    p.M = 1e9;  // light reduced mass equal to m for all practical purposes
    ThreeBodyOptions opt;
    opt.mu_z_override = 1e12;
    opt.richardson = false;
    const double Lz = 1.0;
    const int nz = 64;
    const double hy = Lz / nz / 2;
    const int ny = static_cast<int>(std::ceil((Lz / 2 + 12.0 / p.kappa0()) / hy));
    const double e = solve_3body_2d(p, GridSpec{{Lz, ny * hy}, {nz, ny}}, opt).energy;
    const double col = solve_fixed_centers_grid(p, 0.0, default_centers_grid(p, 0.0));
    CHECK(std::fabs(e / col - 1.0) < 1e-3);
}

TEST_CASE("3-body grid checks and determinism") {
    PhysicalParams p;
    p.M = 100;
    GridSpec g = default_3body_grid(p, 64);
    GridSpec bad = g;
    bad.extents[1] *= 1.01;
    CHECK_THROWS_AS(solve_3body_2d(p, bad), GridAlignmentError);
    ThreeBodyOptions small;
    small.max_nodes = 10000;
    CHECK_THROWS_AS(solve_3body_2d(p, g, small), GridBudgetExceeded);
    ThreeBodyOptions once;
    once.richardson = false;
    const double a = solve_3body_2d(p, g, once).energy;
    const double b = solve_3body_2d(p, g, once).energy;
    CHECK(a == b);
}

TEST_CASE("heavy levels in the exact potential approach the Airy levels") {
    std::vector<double> x, rel;
    double sign = 0.0;
    for (double M : {1e3, 1e4, 1e5, 1e6}) {
        PhysicalParams p;
        p.M = M;
        const double d0 = level(p, 0).deltaE;
        const double gap = bo_spectrum_exact_potential(p, 1)[0] - d0;
        if (sign == 0.0) sign = gap > 0 ? 1.0 : -1.0;
        CHECK(gap * sign > 0.0);
        x.push_back(p.mass_ratio());
        rel.push_back(gap / d0);
    }
    CHECK(sign < 0.0);
    CHECK(std::fabs(fit_loglog_slope(x, rel) - 1.0 / 3.0) < 0.05);
}

TEST_CASE("scaling study preconditions") {
    CHECK_THROWS_AS(scaling_study(PhysicalParams{}, {100, 200, 400}), DomainError);
    CHECK_THROWS_AS(scaling_study(PhysicalParams{}, {100, 101, 102, 103}), DomainError);
}

TEST_CASE("appendix terms: structure and leading exponents") {
    const auto rows = appendix1_checks(PhysicalParams{}, 0, {1e3, 1e4, 1e5, 1e6});
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        CHECK(r.values.size() == 4);
        CHECK(r.bounds.size() == 4);
        CHECK(r.within_bound);
        if (r.term == "cross_2") CHECK(r.vanishes);
        if (r.term == "group_1a") CHECK(std::fabs(r.fitted_exponent - 2.0 / 3.0) < 0.15);
        if (r.term == "group_1b") CHECK(std::fabs(r.fitted_exponent - 4.0 / 3.0) < 0.15);
        if (r.term == "group_1c") CHECK(std::fabs(r.fitted_exponent - 1.0) < 0.15);
    }
    CHECK_THROWS_AS(appendix1_checks(PhysicalParams{}, 1, {1e3, 1e4}), DomainError);
}

TEST_CASE("appendix terms do not depend on the worker count") {
    const std::vector<double> ratios{1e3, 1e4, 1e5};
    setenv("BO_MOLECULE_THREADS", "1", 1);
    CHECK(oracle_threads() == 1);
    const auto a = appendix1_checks(PhysicalParams{}, 0, ratios);
    setenv("BO_MOLECULE_THREADS", "3", 1);
    CHECK(oracle_threads() == 3);
    const auto b = appendix1_checks(PhysicalParams{}, 0, ratios);
    unsetenv("BO_MOLECULE_THREADS");
    for (std::size_t t = 0; t < a.size(); ++t)
        for (std::size_t i = 0; i < ratios.size(); ++i) CHECK(a[t].values[i] == b[t].values[i]);
}

TEST_CASE("log-log slope of an exact power law") {
    CHECK(fit_loglog_slope({1, 2, 4, 8}, {3, 3 * std::pow(2, 0.7), 3 * std::pow(4, 0.7),
                                          -3 * std::pow(8, 0.7)}) == doctest::Approx(0.7));
}

} // TEST_SUITE
