#pragma once

// Independent brute-force verification: finite-difference Sturm-Liouville
// eigensolver, quadrature against the invariant measure, and Euler-Lagrange
// residual checks.

#include <functional>
#include <string>
#include <vector>

#include "losc/grid.hpp"
#include "losc/quantum1d.hpp"

namespace losc::oracle {

struct EigenEntry {
    int index = 0;
    double eigenvalue = 0.0;
    double two_grid_error = 0.0; // Richardson error estimate
    bool converged = true;
};

struct EigenResult {
    std::vector<EigenEntry> entries;
    // Solver-side uniform grid in the geodesic coordinate u (x = Sin_k(u),
    // k = -lambda), where the operator is exactly -psi''/2 + V(x(u)) psi and
    // dmu = du.  Interior nodes only; Dirichlet walls at u = a - h, b + h.
    grid::GridSpec u_grid;
    std::vector<double> x_nodes;               // x(u_i)
    std::vector<std::vector<double>> vectors;  // du-orthonormal (= dmu in x)
    std::string symmetrization;
    double continuum_edge = 0.0; // alpha^2/(2 lambda) for lambda > 0, else inf
};

struct SturmLiouvilleOptions {
    int points = 2000;       // fine-grid interior node count
    double tolerance = 1e-4; // ConvergenceError threshold for bound entries
    double truncation_L = 0; // lambda > 0 half-width in x; 0 = adaptive 12/sqrt(beta)
};

// Lowest k eigenvalues of the 1D deformed-oscillator Hamiltonian, computed on
// two grids (points/2 and points) with Richardson extrapolation.  Entries at
// or above the lambda > 0 continuum edge, or with an unstable two-grid
// difference, are flagged converged = false instead of trusted.
EigenResult sturm_liouville_eigen(const quantum1d::QuantumParams& qp, int k,
                                  const SturmLiouvilleOptions& opt = {});

// Composite Simpson integral of f against dmu = (1 + lambda x^2)^{-1/2} dx.
double quadrature_mu(const grid::GridFunction& f, double lambda);

// max |d/dt (dL/dv) - dL/dx| along a uniformly sampled path, all derivatives
// by 4th-order finite differences (numeric partials of L).
double euler_lagrange_residual(const std::function<double(double, double)>& lagrangian,
                               const std::vector<double>& x_of_t, double dt);

// CSV export `index,eigenvalue,two_grid_error` with 17 significant digits.
void export_csv(const EigenResult& r, const std::string& path);

} // namespace losc::oracle
