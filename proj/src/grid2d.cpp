#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "bomol/errors.hpp"
#include "bomol/oracle.hpp"

namespace bomol {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

struct Layout {
    bool full = false;
    int nz = 0, ny = 0;    // quadrant node counts per axis
    int jz0 = 0, ky0 = 0;  // offsets of the origin in storage
    int sz = 0, sy = 0;    // stored counts per axis
    long size() const { return static_cast<long>(sz) * sy; }
    long index(int j, int k) const {
        return static_cast<long>(j + jz0) * sy + (k + ky0);
    }
};

Layout make_layout(int nz, int ny, bool full) {
    Layout l;
    l.full = full;
    l.nz = nz;
    l.ny = ny;
    if (full) {
        l.jz0 = nz - 1;
        l.ky0 = ny - 1;
        l.sz = 2 * nz - 1;
        l.sy = 2 * ny - 1;
    } else {
        l.sz = nz;
        l.sy = ny;
    }
    return l;
}

struct Masses {
    double mu_z, mu_y;
};

Masses masses(const PhysicalParams& p, const ThreeBodyOptions& opt) {
    Masses ms;
    ms.mu_z = opt.mu_z_override > 0.0 ? opt.mu_z_override : 0.5 * p.M;
    ms.mu_y = 2.0 * p.M * p.m / (2.0 * p.M + p.m);
    return ms;
}

// Symmetrized 5-point Hamiltonian. In the quadrant the symmetry planes carry half
// cells; W^{1/2} H W^{-1/2} turns the weight 1/2 into a sqrt(2) coupling.
SpMat assemble(const PhysicalParams& p, const Masses& ms, const Layout& l, double hz, double hy,
               double shift) {
    const double cz = p.hbar * p.hbar / (2.0 * ms.mu_z * hz * hz);
    const double cy = p.hbar * p.hbar / (2.0 * ms.mu_y * hy * hy);
    const double well = p.lambda / hy;
    const int jlo = l.full ? -(l.nz - 1) : 0;
    const int klo = l.full ? -(l.ny - 1) : 0;
    const double s2 = std::sqrt(2.0);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(l.size()) * 5);
    for (int j = jlo; j < l.nz; ++j) {
        for (int k = klo; k < l.ny; ++k) {
            const long i = l.index(j, k);
            double d = 2.0 * cz + 2.0 * cy - shift;
            if (k == j) d -= well;
            if (k == -j && (l.full ? true : k == 0)) d -= well;
            trip.emplace_back(i, i, d);
            if (j + 1 < l.nz) {
                const double c = (!l.full && j == 0) ? -s2 * cz : -cz;
                const long o = l.index(j + 1, k);
                trip.emplace_back(i, o, c);
                trip.emplace_back(o, i, c);
            }
            if (k + 1 < l.ny) {
                const double c = (!l.full && k == 0) ? -s2 * cy : -cy;
                const long o = l.index(j, k + 1);
                trip.emplace_back(i, o, c);
                trip.emplace_back(o, i, c);
            }
        }
    }
    SpMat A(l.size(), l.size());
    A.setFromTriplets(trip.begin(), trip.end());
    return A;
}

struct Eigenpair {
    double energy;
    Vec x;
};

// Largest eigenvalue of A^{-1} by restarted Lanczos with full reorthogonalization.
Eigenpair shift_invert_ground(const SpMat& A, double shift, const Vec& start) {
    Eigen::SimplicialLDLT<SpMat> ldlt(A);
    if (ldlt.info() != Eigen::Success)
        throw NumericalError("solve_3body_2d: factorization failed");
    if ((ldlt.vectorD().array() <= 0.0).any())
        throw NumericalError("solve_3body_2d: shift is not below the spectrum");

    const int kmax = 40;
    Vec v = start.normalized();
    double best = 0.0;
    for (int restart = 0; restart < 30; ++restart) {
        std::vector<Vec> V{v};
        std::vector<double> alpha, beta;
        for (int k = 0; k < kmax; ++k) {
            Vec w = ldlt.solve(V[k]);
            alpha.push_back(w.dot(V[k]));
            for (int pass = 0; pass < 2; ++pass)
                for (const Vec& u : V) w -= w.dot(u) * u;
            const double b = w.norm();
            const int n = static_cast<int>(alpha.size());
            Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
            for (int i = 0; i < n; ++i) {
                T(i, i) = alpha[i];
                if (i + 1 < n) T(i, i + 1) = T(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
            const double theta = es.eigenvalues()(n - 1);
            const Vec s = es.eigenvectors().col(n - 1);
            best = theta;
            const double resid = b * std::fabs(s(n - 1));
            if (resid <= 1e-12 * theta || b <= 1e-300 || k + 1 == kmax) {
                Vec x = Vec::Zero(A.rows());
                for (int i = 0; i < n; ++i) x += s(i) * V[i];
                x.normalize();
                if (resid <= 1e-12 * theta || b <= 1e-300) {
                    const double rq = x.dot(A * x);
                    if (x.sum() < 0.0) x = -x;
                    return {shift + rq, x};
                }
                v = x;
                break;
            }
            beta.push_back(b);
            V.push_back(w / b);
        }
    }
    throw NumericalError("solve_3body_2d: Lanczos did not converge", shift + 1.0 / best);
}

struct Checked {
    double hz, hy;
};

Checked check_grid(const PhysicalParams& p, const Masses& ms, const GridSpec& g) {
    if (g.extents.size() != 2 || g.steps.size() != 2)
        throw DomainError("solve_3body_2d: grid needs two extents and two step counts");
    const double Lz = g.extents[0], Ly = g.extents[1];
    const int nz = g.steps[0], ny = g.steps[1];
    if (nz < 64 || ny < 64) throw DomainError("solve_3body_2d: at least 64 points per axis");
    if (!(Lz > 0.0) || !(Ly > 0.0)) throw DomainError("solve_3body_2d: extents must be positive");
    const double hz = Lz / nz, hy = Ly / ny;
    if (std::fabs(hy - 0.5 * hz) > 1e-12 * hz)
        throw GridAlignmentError("solve_3body_2d: h_y must equal h_z / 2");
    const double beta =
        std::cbrt(2.0 * ms.mu_z * p.slope() / (p.hbar * p.hbar));
    if (Lz < 6.0 / beta) throw DomainError("solve_3body_2d: z extent below 6 Airy widths");
    if (Ly - 0.5 * Lz < 8.0 / p.kappa0())
        throw DomainError("solve_3body_2d: y extent below 8 decay lengths past the wells");
    return {hz, hy};
}

Vec start_vector(const Layout& l, double hz, double hy, double kz, double ky) {
    Vec v(l.size());
    const int jlo = l.full ? -(l.nz - 1) : 0;
    const int klo = l.full ? -(l.ny - 1) : 0;
    for (int j = jlo; j < l.nz; ++j)
        for (int k = klo; k < l.ny; ++k) {
            const double z = std::fabs(j * hz), y = std::fabs(k * hy);
            v(l.index(j, k)) = std::exp(-kz * z - ky * std::fabs(y - 0.5 * z));
        }
    return v;
}

struct Single {
    double energy;
    Vec x;
    Layout layout;
};

Single solve_single(const PhysicalParams& p, const Masses& ms, double Lz, double Ly, int nz,
                    int ny, const ThreeBodyOptions& opt) {
    const Layout l = make_layout(nz, ny, opt.full_plane);
    if (l.size() > opt.max_nodes)
        throw GridBudgetExceeded("solve_3body_2d: " + std::to_string(l.size()) +
                                 " nodes exceed the budget of " + std::to_string(opt.max_nodes));
    const double hz = Lz / nz, hy = Ly / ny;
    const double shift = -opt.shift_factor * p.nu0_squared();
    const SpMat A = assemble(p, ms, l, hz, hy, shift);
    const double beta = std::cbrt(2.0 * ms.mu_z * p.slope() / (p.hbar * p.hbar));
    const Eigenpair ep = shift_invert_ground(A, shift, start_vector(l, hz, hy, beta, p.kappa0()));
    return {ep.energy, ep.x, l};
}

} // namespace

GridSpec default_3body_grid(const PhysicalParams& p, int nz) {
    p.validate();
    const double beta = std::cbrt(2.0 * p.mu() * p.slope() / (p.hbar * p.hbar));
    const double Lz = 10.0 / beta;
    const double hz = Lz / nz;
    const int ny = static_cast<int>(std::ceil((0.5 * Lz + 12.0 / p.kappa0()) / (0.5 * hz)));
    return GridSpec{{Lz, ny * 0.5 * hz}, {nz, ny}};
}

ThreeBodyResult solve_3body_2d(const PhysicalParams& p, const GridSpec& grid,
                               const ThreeBodyOptions& opt) {
    p.validate();
    const Masses ms = masses(p, opt);
    check_grid(p, ms, grid);
    const double Lz = grid.extents[0], Ly = grid.extents[1];
    const int nz = grid.steps[0], ny = grid.steps[1];

    ThreeBodyResult r;
    r.nz = nz;
    r.ny = ny;
    if (opt.richardson) {
        const long fine_nodes = make_layout(2 * nz, 2 * ny, opt.full_plane).size();
        if (fine_nodes > opt.max_nodes)
            throw GridBudgetExceeded("solve_3body_2d: refined grid of " +
                                     std::to_string(fine_nodes) + " nodes exceeds the budget of " +
                                     std::to_string(opt.max_nodes));
    }
    r.coarse = solve_single(p, ms, Lz, Ly, nz, ny, opt).energy;
    if (!opt.richardson) {
        r.fine = r.energy = r.coarse;
        r.unknowns_fine = make_layout(nz, ny, opt.full_plane).size();
        return r;
    }
    r.fine = solve_single(p, ms, Lz, Ly, 2 * nz, 2 * ny, opt).energy;
    r.energy = (4.0 * r.fine - r.coarse) / 3.0;
    r.unknowns_fine = make_layout(2 * nz, 2 * ny, opt.full_plane).size();
    return r;
}

ThreeBodyState solve_3body_state(const PhysicalParams& p, const GridSpec& grid,
                                 const ThreeBodyOptions& opt) {
    p.validate();
    const Masses ms = masses(p, opt);
    const Checked c = check_grid(p, ms, grid);
    const Single s = solve_single(p, ms, grid.extents[0], grid.extents[1], grid.steps[0],
                                  grid.steps[1], opt);
    ThreeBodyState st;
    st.energy = s.energy;
    st.nz = s.layout.sz;
    st.ny = s.layout.sy;
    st.hz = c.hz;
    st.hy = c.hy;
    st.z0 = opt.full_plane ? -(s.layout.nz - 1) * c.hz : 0.0;
    st.y0 = opt.full_plane ? -(s.layout.ny - 1) * c.hy : 0.0;
    st.psi.assign(s.x.data(), s.x.data() + s.x.size());
    if (!opt.full_plane) {
        // undo the W^{1/2} similarity on the half-cell rows
        for (int j = 0; j < st.nz; ++j)
            for (int k = 0; k < st.ny; ++k) {
                double w = (j == 0 ? 0.5 : 1.0) * (k == 0 ? 0.5 : 1.0);
                st.psi[static_cast<std::size_t>(j) * st.ny + k] /= std::sqrt(w);
            }
    }
    const double mx = *std::max_element(st.psi.begin(), st.psi.end());
    for (double& v : st.psi) v /= mx;
    return st;
}

} // namespace bomol
