#pragma once

// The 2D quantum deformed oscillator in dimensionless form:
// H = H1 + H2 - Lambda J^2, separation in the (z, y) chart, deformed Hermite
// polynomials and the closed-form degenerate spectrum.

#include <functional>
#include <string>
#include <vector>

#include "losc/errors.hpp"

namespace losc::quantum2d {

// ---------------------------------------------------------------------------
// Closed-form spectral algebra

// G_mu = +sqrt(1 + (1 - 2 mu) Lambda).
double g_factor(double Lambda, double mu);

// 2 nu = G (2n + 1) - n (n + 1) Lambda.
double nu_quantized(double Lambda, double G, int n);

// e_{m,n} = mu_m + nu_n = (m + n + 1) (1 - Lambda (m + n) / 2).
// Admissibility: G = 1 - Lambda m > 0 and the 1D bound condition at
// N = m + n.
double energy_2d(double Lambda, int m, int n);

// Polynomial solution of (1 + Lambda y^2) q'' + 2 (Lambda - G) y q'
// + (2 nu - G) q = 0 at quantized nu, from the recursion
// c_{n+2} = -c_n (Lambda n (n+1) - G (2n+1) + 2 nu) / ((n+2)(n+1)).
struct DeformedHermite {
    int degree = 0;
    double Lambda = 0.0;
    double G = 1.0;
    double nu = 0.5;
    std::vector<double> coefficients; // c_0 .. c_degree
    bool even_parity = true;

    double operator()(double y) const;
    double derivative(double y) const;
    double second_derivative(double y) const;
};
DeformedHermite deformed_hermite(double Lambda, double G, int n);

// Residual of the defining ODE at a point (should vanish identically).
double hermite_ode_residual(const DeformedHermite& q, double y);

// Transverse mode Y_n(y) = q_n(y) (1 + Lambda y^2)^{-G/(2 Lambda)}
// (gaussian envelope at Lambda = 0).
double y_mode(double Lambda, double G, int n, double y);

// Psi_{m,n}(x, y) = Z_m(z) Y_n(y), z = x / sqrt(1 + Lambda y^2), with Z_m the
// 1D dimensionless eigenfunction at quantum number m and the Y-chain G at
// mu_m (G = 1 - Lambda m).
double wavefunction_2d(double Lambda, int m, int n, double x, double y);

// ---------------------------------------------------------------------------
// 2D grid operators

struct Grid2DSpec {
    double ax = -8.0, bx = 8.0;
    double ay = -8.0, by = 8.0;
    int nx = 129, ny = 129;

    double dx() const { return (bx - ax) / (nx - 1); }
    double dy() const { return (by - ay) / (ny - 1); }
    double x(int i) const { return ax + i * dx(); }
    double y(int j) const { return ay + j * dy(); }
};

struct GridFunction2D {
    Grid2DSpec spec;
    std::vector<double> values; // row-major, index j * nx + i
    int margin = 0;

    static GridFunction2D sample(const Grid2DSpec& g,
                                 const std::function<double(double, double)>& f);
    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * spec.nx + i]; }
    double at(int i, int j) const {
        return values[static_cast<std::size_t>(j) * spec.nx + i];
    }
};

// Full operator H = -[(1+L r^2)(psi_xx + psi_yy) + L x psi_x + L y psi_y]/2
// + L [x^2 psi_yy + y^2 psi_xx - 2 x y psi_xy - x psi_x - y psi_y]/2
// + (1+L) r^2 psi / (2 (1 + L r^2)), 4th-order stencils, single pass.
// OpenMP-parallel over rows; the _serial variant is the reference
// implementation and computes bitwise-identical values.
GridFunction2D apply_hamiltonian_2d(double Lambda, const GridFunction2D& psi);
GridFunction2D apply_hamiltonian_2d_serial(double Lambda, const GridFunction2D& psi);

// The three commuting pieces; apply_h1 + apply_h2 - Lambda * apply_jsq
// reassembles the full operator exactly.
GridFunction2D apply_h1_2d(double Lambda, const GridFunction2D& psi);
GridFunction2D apply_h2_2d(double Lambda, const GridFunction2D& psi);
GridFunction2D apply_jsq_2d(const GridFunction2D& psi); // -J^2/hbar^2 piece, potential-free
GridFunction2D apply_j_2d(const GridFunction2D& psi);   // x d/dy - y d/dx

// The three complete systems of compatible observables:
// {H1, H2 - L J^2}, {H1 - L J^2, H2}, {H1 + H2, J}.
struct ObservablePair {
    std::string label;
    std::function<GridFunction2D(const GridFunction2D&)> first;
    std::function<GridFunction2D(const GridFunction2D&)> second;
};
std::vector<ObservablePair> compatible_sets(double Lambda);

// ||[A, B] psi|| / ||psi|| over the common valid interior.
double commutator_residual(const std::function<GridFunction2D(const GridFunction2D&)>& A,
                           const std::function<GridFunction2D(const GridFunction2D&)>& B,
                           const GridFunction2D& psi);

} // namespace losc::quantum2d
