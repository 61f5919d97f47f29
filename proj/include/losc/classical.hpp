#pragma once

// Classical model families: Lagrangians, Hamiltonians, exact solutions and
// first integrals, all as evaluatable functions of phase-space points.

#include <functional>
#include <string>

#include "losc/params.hpp"

namespace losc::classical {

// ---------------------------------------------------------------------------
// 1D deformed (Mathews-Lakshmanan) oscillator

// xddot from (1 + lambda x^2) xddot - lambda x xdot^2 + alpha^2 x = 0,
// plus the barrier force 2k(1 + lambda x^2)/x^3 when k > 0.
double acceleration_1d(const ModelParams1D& p, double x, double v);

// Pure oscillator case (k ignored).
double ml_acceleration(const ModelParams1D& p, double x, double v);

struct Point1D {
    double x;
    double v;
};

// x = A sin(w t + phi), w = alpha / sqrt(1 + lambda A^2).
Point1D ml_exact_solution(const ModelParams1D& p, double A, double phi, double t);

// Frequency-amplitude relation of the deformed oscillator.
double ml_frequency(const ModelParams1D& p, double A);

// Pinney-Ermakov solution of the flat isotonic oscillator,
// x = (1/(alpha A)) sqrt((alpha^2 A^4 + c) sin^2(alpha t + phi) - c), c = -2k.
double isotonic_exact_solution(const ModelParams1D& p, double A, double phi, double t);

// R1 = lambda w^2 A^4 - (alpha^2 - w^2 - 2 k lambda^2) A^2 + 2 k lambda.
// The bounded deformed-isotonic solution solves the equation of motion
// iff R1 = 0.
double deformed_isotonic_residual(const ModelParams1D& p, double omega, double A);

// Bounded deformed-isotonic solution
// x = (1/(w A)) sqrt((w^2 A^4 - 2k) sin^2(w t + phi) + 2k).
// Valid only when deformed_isotonic_residual(p, omega, A) = 0; callers
// verify by equation residual.
double deformed_isotonic_solution(const ModelParams1D& p, double omega, double A,
                                  double phi, double t);

// Unbounded branches; contracts are residual-checked only.
double deformed_isotonic_unbounded(const ModelParams1D& p, double Omega, double A,
                                   double phi, double t);
double deformed_isotonic_limit_unbounded(double A, double B, double C, double t);

// L = v^2 / (2 (1 + lambda x^2)) - alpha^2 x^2 / (2 (1 + lambda x^2)) - k/x^2.
double lagrangian_1d(const ModelParams1D& p, double x, double v);

// H = (1 + lambda x^2) p^2 / 2 + alpha^2 x^2 / (2 (1 + lambda x^2)) + k/x^2.
double hamiltonian_1d(const ModelParams1D& p, double x, double px);

// ---------------------------------------------------------------------------
// 2D kinematics

struct Momenta2D {
    double px;
    double py;
};
struct Velocities2D {
    double vx;
    double vy;
};

// p_x = ((1 + lambda y^2) v_x - lambda x y v_y) / (1 + lambda r^2), symmetric
// in y.  Satisfies x p_y - y p_x = x v_y - y v_x.
Momenta2D legendre_2d(const ModelParams2D& p, double x, double y, double vx, double vy);

// Inverse map, v_x = p_x + lambda x (x p_x + y p_y).
Velocities2D legendre_2d_inverse(const ModelParams2D& p, double x, double y,
                                 double px, double py);

// T2(lambda) - V as a function of positions and velocities.  Barriers k2, k3
// are included when nonzero.
double lagrangian_2d(const ModelParams2D& p, double x, double y, double vx, double vy);

// H = (p_x^2 + p_y^2 + lambda (x p_x + y p_y)^2)/2 + V(x, y).
double hamiltonian_2d(const ModelParams2D& p, double x, double y, double px, double py);

// Deformed potential alpha^2 r^2 / (2 (1 + lambda r^2)) plus barriers.
double potential_2d(const ModelParams2D& p, double x, double y);

// ---------------------------------------------------------------------------
// First integrals

struct Integrals3 {
    double I1;
    double I2;
    double I3;
};
struct Integrals4 {
    double I1;
    double I2;
    double I3;
    double I4;
};

// Nonlinear 2D oscillator (velocity kind): I1 = |K1|^2, I2 = |K2|^2,
// I3 = Im(K1 K2*) = alpha (x v_y - y v_x).
Integrals3 nonlinear2d_integrals(const ModelParams2D& p, const PhaseState& s);

// Deformed Smorodinsky-Winternitz (velocity kind):
// I1 = P1^2 + alpha^2 x^2/(1+lambda r^2) + 2 k2 (1+lambda y^2)/x^2, etc.
Integrals3 deformed_sw_integrals(const ModelParams2D& p, const PhaseState& s);

// Flat rational oscillator (momentum kind): E_x, E_y, Im(J), Re(J) with
// J = K_x^{n2} (K_y^*)^{n1}, K_x = p_x + i n1 w0 x, K_y = p_y + i n2 w0 y.
Integrals4 rational_oscillator_integrals(const ModelParams2D& p, const PhaseState& s);

// Curved Smorodinsky-Winternitz on M_kappa^2 in geodesic polar coordinates.
struct CurvedSWParams {
    double omega0 = 1.0;
    double k2 = 0.0;
    double k3 = 0.0;
};
Integrals3 curved_sw_integrals(double kappa, double rho, double phi, double v_rho,
                               double v_phi, const CurvedSWParams& cp);

// Lagrangian of the curved S-W family (geodesic polar coordinates):
// L = (v_rho^2 + Sin_k^2(rho) v_phi^2)/2 - U(rho, phi).
double curved_sw_lagrangian(double kappa, double rho, double phi, double v_rho,
                            double v_phi, const CurvedSWParams& cp);
double curved_sw_potential(double kappa, double rho, double phi, const CurvedSWParams& cp);

// Named evaluator over phase states, used by the drift machinery.
struct ConservedQuantity {
    std::string name;
    std::function<double(const PhaseState&)> eval;
};

// Domain guard value 1 + lambda r^2; throws DomainError when <= 0.
double metric_factor(double lambda, double r2, const char* where);

} // namespace losc::classical
