#pragma once

// The 1D quantum deformed oscillator: measure-weighted operator,
// dimensionless reduction, power-series eigenproblem, closed-form spectra
// and the shape-invariant factorization ladder.

#include <optional>
#include <string>
#include <vector>

#include "losc/grid.hpp"

namespace losc::quantum1d {

// Physical parameters (beta, lambda, m, hbar) together with the derived
// dimensionless deformation Lambda = hbar lambda / (m beta) and the
// oscillator coupling alpha^2 = beta (beta + hbar lambda / m).
struct QuantumParams {
    double lambda = 0.0;
    double beta = 1.0;
    double mass = 1.0;
    double hbar = 1.0;

    double Lambda() const { return hbar * lambda / (mass * beta); }
    double alpha2() const { return beta * (beta + hbar * lambda / mass); }

    static QuantumParams from_beta(double beta, double lambda, double mass = 1.0,
                                   double hbar = 1.0) {
        if (beta <= 0.0) throw DomainError("QuantumParams: beta must be positive");
        return {lambda, beta, mass, hbar};
    }
};

enum class Parity { even, odd };

struct SeriesSolution {
    std::vector<double> coefficients; // a_0 .. a_n_max
    Parity parity = Parity::even;
    double energy = 0.0; // dimensionless curly-E
    std::optional<int> terminated_at;
    double ratio_estimate = 0.0; // empirical lim |a_{n+2}/a_n|
};

enum class Provenance { series, ladder, oracle };

struct SpectrumEntry {
    int n = 0;
    double energy = 0.0;
    Provenance provenance = Provenance::series;
    double residual = 0.0;
    bool converged = true;
};

// Invariant measure weight (1 + lambda x^2)^{-1/2}.
double invariant_measure_weight(double lambda, double x);

// Power-series solution of (1 + Lambda y^2) phi'' + (Lambda - 2) y phi'
// + (2E - 1) phi = 0 at the given parity; a_{n+2} =
// -a_n (Lambda n^2 - 2n + 2E - 1) / ((n+2)(n+1)).
SeriesSolution series_solve(double Lambda, double energy, Parity parity, int n_max);

// Dimensionless spectrum, E_p = p (1 - Lambda p / 2) + 1/2.
double energy_series(double Lambda, int p);

// Physical spectrum from the factorization ladder,
// E_n = n beta - n^2 lambda / 2 + beta / 2 (hbar = m = 1 units).
double energy_ladder(double beta, double lambda, int n);

// floor(2 beta / lambda) for lambda > 0 (equality admitted); nullopt means
// unbounded (lambda <= 0).
std::optional<long> max_bound_index(double beta, double lambda);

// Unnormalized ground-state profile (1 + lambda x^2)^{-beta/(2 lambda)}
// (gaussian at lambda = 0).
double ground_state_unnormalized(double beta, double lambda, double x);

// Ground state sampled on g and normalized in L^2(dmu).
grid::GridFunction ground_state(double beta, double lambda, const grid::GridSpec& g);

// Evaluate the series eigenfunction Psi_p(y) =
// phi_p(y) (1 + Lambda y^2)^{-1/(2 Lambda)}, unnormalized.
double series_eigenfunction(double Lambda, int p, double y);

// Hamiltonian H1 = -(1+lambda x^2) psi''/2 - lambda x psi'/2
// + alpha^2 x^2 psi / (2 (1 + lambda x^2)), 4th-order stencils.
grid::GridFunction apply_hamiltonian_1d(const QuantumParams& qp,
                                        const grid::GridFunction& psi);

// A = (sqrt(1+lambda x^2) d/dx + beta x / sqrt(1+lambda x^2)) / sqrt(2) and
// its adjoint (sign-flipped derivative term).
grid::GridFunction apply_A(double beta, double lambda, const grid::GridFunction& psi);
grid::GridFunction apply_Aplus(double beta, double lambda, const grid::GridFunction& psi);

// Psi_n = A+(beta) A+(beta_1) ... A+(beta_{n-1}) Psi_0(beta_n), normalized in
// L^2(dmu); beta_k = beta - k lambda.
struct LadderEigenfunction {
    grid::GridFunction psi;
    double energy = 0.0;
    double residual = 0.0; // ||H psi - E psi|| / ||psi|| over valid rows
};
LadderEigenfunction ladder_eigenfunction(double beta, double lambda, int n,
                                         const grid::GridSpec& g);

// || AA+(beta) psi - A+A(beta - lambda) psi - R(beta - lambda) psi || / ||psi||
// with R(beta) = beta + lambda / 2.
double shape_invariance_residual(double beta, double lambda,
                                 const grid::GridFunction& psi);

// dmu-weighted inner product over the common valid rows of f and g.
double inner_product_mu(const grid::GridFunction& f, const grid::GridFunction& g,
                        double lambda);

// Three-route spectrum table (series and ladder closed forms; the oracle
// column is filled by callers holding an oracle result).
std::vector<SpectrumEntry> closed_form_spectrum(const QuantumParams& qp, int levels,
                                                Provenance route);

} // namespace losc::quantum1d
