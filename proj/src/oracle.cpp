#include "losc/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "losc/ktrig.hpp"

namespace losc::oracle {

namespace {

// Eigenvalues (and optionally du-orthonormal eigenvectors) of
// -psi''/2 + V(u) psi on n interior nodes of (-U, U), Dirichlet walls,
// 4th-order 5-point stencil.  The matrix is symmetric banded, kd = 2.
struct BandedSolve {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> vectors;
    double h = 0.0;
};

BandedSolve solve_interval(double U, const std::function<double(double)>& V, int n,
                           int k, bool want_vectors) {
    if (n < 16) throw GridTooCoarse("sturm_liouville: fewer than 16 interior nodes");
    const double h = 2.0 * U / (n + 1);
    const double h2 = h * h;
    const int kd = 2, ldab = kd + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double u = -U + (j + 1) * h;
        ab[0 + static_cast<std::size_t>(j) * ldab] = 1.25 / h2 + V(u);
        if (j + 1 < n) ab[1 + static_cast<std::size_t>(j) * ldab] = -2.0 / (3.0 * h2);
        if (j + 2 < n) ab[2 + static_cast<std::size_t>(j) * ldab] = 1.0 / (24.0 * h2);
    }

    std::vector<double> w(n), z, q;
    std::vector<lapack_int> ifail(n);
    lapack_int m = 0;
    const char jobz = want_vectors ? 'V' : 'N';
    if (want_vectors) z.resize(static_cast<std::size_t>(n) * k);
    q.resize(want_vectors ? static_cast<std::size_t>(n) * n : 1);
    const lapack_int info = LAPACKE_dsbevx(
        LAPACK_COL_MAJOR, jobz, 'I', 'L', n, kd, ab.data(), ldab, q.data(), n, 0.0,
        0.0, 1, k, 2.0 * LAPACKE_dlamch('S'), &m, w.data(),
        want_vectors ? z.data() : q.data(), n, ifail.data());
    if (info != 0)
        throw ConvergenceError("sturm_liouville: dsbevx failed, info = " +
                               std::to_string(info));
    if (m < k)
        throw ConvergenceError("sturm_liouville: only " + std::to_string(m) + " of " +
                               std::to_string(k) + " eigenvalues converged");

    BandedSolve out;
    out.h = h;
    out.eigenvalues.assign(w.begin(), w.begin() + k);
    if (want_vectors) {
        const double scale = 1.0 / std::sqrt(h); // Euclidean -> du-orthonormal
        out.vectors.resize(k);
        for (int c = 0; c < k; ++c) {
            out.vectors[c].resize(n);
            for (int i = 0; i < n; ++i)
                out.vectors[c][i] = z[static_cast<std::size_t>(c) * n + i] * scale;
        }
    }
    return out;
}

} // namespace

EigenResult sturm_liouville_eigen(const quantum1d::QuantumParams& qp, int k,
                                  const SturmLiouvilleOptions& opt) {
    if (k < 1) throw ConfigError("sturm_liouville: k must be >= 1");
    if (k > opt.points / 10)
        throw ConfigError("sturm_liouville: k > points/10 is not well resolved");
    const double lambda = qp.lambda, a2 = qp.alpha2();
    const auto V = [lambda, a2](double u) {
        const double x = ktrig::from_geodesic(lambda, u);
        return 0.5 * a2 * x * x / (1.0 + lambda * x * x);
    };

    double U;
    if (lambda < 0.0) {
        // x walls at +-1/sqrt(|lambda|) are u walls at +-pi/(2 sqrt(|lambda|)),
        // where V diverges; the Dirichlet box is the natural domain.
        U = M_PI / (2.0 * std::sqrt(-lambda));
    } else {
        double L = opt.truncation_L > 0.0 ? opt.truncation_L : 12.0 / std::sqrt(qp.beta);
        U = ktrig::to_geodesic(lambda, L);
        if (opt.truncation_L <= 0.0) {
            // Double the box until the highest requested eigenvalue stops
            // moving (near-edge lambda > 0 states are weakly localized).
            // The node count doubles with the box so the probe keeps a fixed
            // spacing and the comparison isolates the truncation effect.
            int n_probe = opt.points / 4;
            double prev = solve_interval(U, V, n_probe, k, false).eigenvalues[k - 1];
            for (int pass = 0; pass < 4; ++pass) {
                const double U2 = 2.0 * U;
                // h = 2U/(n+1), so the doubled box keeps the same spacing
                // with 2n+1 interior nodes
                const double ek =
                    solve_interval(U2, V, 2 * n_probe + 1, k, false).eigenvalues[k - 1];
                if (std::fabs(ek - prev) < 1e-8) break;
                U = U2;
                n_probe = 2 * n_probe + 1;
                prev = ek;
            }
        }
    }

    const auto coarse = solve_interval(U, V, opt.points / 2, k, false);
    const auto fine = solve_interval(U, V, opt.points, k, true);

    EigenResult r;
    r.symmetrization =
        "geodesic substitution x = Sin_k(u), k = -lambda: exactly symmetric "
        "banded operator -d^2/du^2 / 2 + V(x(u)), measure du";
    r.u_grid = {-U + fine.h, U - fine.h, opt.points,
                grid::GridSpec::Boundary::dirichlet};
    r.x_nodes.resize(opt.points);
    for (int i = 0; i < opt.points; ++i)
        r.x_nodes[i] = ktrig::from_geodesic(lambda, r.u_grid.x(i));
    r.vectors = fine.vectors;
    r.continuum_edge = lambda > 0.0 ? 0.5 * a2 / lambda
                                    : std::numeric_limits<double>::infinity();

    const double rh = coarse.h / fine.h; // ~2, not exactly (interior counts)
    const double rh4 = rh * rh * rh * rh;
    for (int i = 0; i < k; ++i) {
        EigenEntry e;
        e.index = i;
        const double e1 = coarse.eigenvalues[i], e2 = fine.eigenvalues[i];
        const double extrap = e2 + (e2 - e1) / (rh4 - 1.0);
        e.eigenvalue = extrap;
        e.two_grid_error = std::fabs(extrap - e2);
        e.converged = e.two_grid_error <= opt.tolerance &&
                      e.eigenvalue < r.continuum_edge - 10.0 * opt.tolerance;
        r.entries.push_back(e);
    }
    if (!r.entries[0].converged && r.entries[0].eigenvalue < r.continuum_edge)
        throw ConvergenceError("sturm_liouville: ground eigenvalue two-grid error " +
                               std::to_string(r.entries[0].two_grid_error) +
                               " exceeds tolerance");
    return r;
}

double quadrature_mu(const grid::GridFunction& f, double lambda) {
    grid::GridFunction g{f.spec, std::vector<double>(f.values.size()), f.margin};
    for (int i = 0; i < f.size(); ++i)
        g.values[i] =
            f.values[i] * quantum1d::invariant_measure_weight(lambda, f.spec.x(i));
    return grid::simpson(g);
}

double euler_lagrange_residual(const std::function<double(double, double)>& lagrangian,
                               const std::vector<double>& x_of_t, double dt) {
    const int n = static_cast<int>(x_of_t.size());
    if (n < 9) throw GridTooCoarse("euler_lagrange_residual: need >= 9 samples");

    auto d4 = [dt](const std::vector<double>& f, int i) {
        return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * dt);
    };

    std::vector<double> v(n, 0.0), p(n, 0.0);
    for (int i = 2; i < n - 2; ++i) v[i] = d4(x_of_t, i);
    double vscale = 0.0;
    for (int i = 2; i < n - 2; ++i) vscale = std::max(vscale, std::fabs(v[i]));
    const double eps = 1e-6 * std::max(1.0, vscale);
    for (int i = 2; i < n - 2; ++i)
        p[i] = (lagrangian(x_of_t[i], v[i] + eps) - lagrangian(x_of_t[i], v[i] - eps)) /
               (2.0 * eps);

    double worst = 0.0;
    double xscale = 0.0;
    for (double x : x_of_t) xscale = std::max(xscale, std::fabs(x));
    const double epsx = 1e-6 * std::max(1.0, xscale);
    for (int i = 4; i < n - 4; ++i) {
        const double dpdt = d4(p, i);
        const double dLdx =
            (lagrangian(x_of_t[i] + epsx, v[i]) - lagrangian(x_of_t[i] - epsx, v[i])) /
            (2.0 * epsx);
        worst = std::max(worst, std::fabs(dpdt - dLdx));
    }
    return worst;
}

void export_csv(const EigenResult& r, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw ConfigError("export_csv: cannot open " + path);
    std::fprintf(f, "index,eigenvalue,two_grid_error\n");
    for (const auto& e : r.entries)
        std::fprintf(f, "%d,%.17g,%.17g\n", e.index, e.eigenvalue, e.two_grid_error);
    std::fclose(f);
}

} // namespace losc::oracle
