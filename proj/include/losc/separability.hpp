#pragma once

// Hamilton-Jacobi separability charts for the 2D deformed oscillator family,
// the per-chart quadratic integrals and the three-term decompositions of the
// Hamiltonians.

#include <array>
#include <functional>
#include <utility>

#include "losc/classical.hpp"
#include "losc/params.hpp"

namespace losc::separability {

// A coordinate chart on the configuration plane.  lambda travels with the
// chart so round trips are deterministic.
struct Chart {
    enum class Tag { zx_y, x_zy, polar, cartesian, geodesic_polar, gnomonic };
    Tag tag = Tag::cartesian;
    double lambda = 0.0;
};

Chart::Tag chart_tag_from_name(const std::string& name);
const char* chart_name(Chart::Tag tag);

// (x, y) -> (u1, u2).  zx_y gives (x/sqrt(1+lambda y^2), y); x_zy is the
// mirrored chart; polar returns (r, phi) with phi in (-pi, pi] and throws
// OriginError at the origin; geodesic_polar returns (rho, phi) with
// r = Sin_k(rho), k = -lambda; gnomonic rescales radially by
// 1/sqrt(1 + lambda r^2).
std::array<double, 2> chart_forward(const Chart& c, double x, double y);
std::array<double, 2> chart_inverse(const Chart& c, double u1, double u2);

// Separable potential data for a chart.  For zx_y the potential is
// V = (alpha^2/2) [W1(z_x)/(1+lambda y^2) + W2(y)]; x_zy mirrored; polar uses
// V = (alpha^2/2) [W1(r) + W2(phi)/r^2] (W1 = F, W2 = G); cartesian
// V = (alpha^2/2) [W1(x) + W2(y)].
struct SeparablePotential {
    Chart chart;
    std::function<double(double)> W1;
    std::function<double(double)> W2;
};

// The deformed oscillator V = alpha^2 r^2 / (2 (1 + lambda r^2)) expressed in
// the given chart; W1(z) = W2(z) = z^2/(1+lambda z^2) for zx_y/x_zy,
// F(r) = r^2/(1+lambda r^2), G = 0 for polar.
SeparablePotential oscillator_separable(const Chart& c);

double separable_potential_value(const SeparablePotential& sp, double alpha,
                                 double x, double y);

// The two quadratic integrals of the chart (momentum-kind state):
//   zx_y:  I1 = (1+lambda r^2) p_x^2 + alpha^2 W1(z_x)
//          I2 = (1+lambda r^2) p_y^2 - lambda J^2
//               + alpha^2 (W2(y) - lambda y^2 W1(z_x)/(1+lambda y^2))
//   polar: I2 = p_phi^2 + alpha^2 W2(phi)
//          I1 = (1+lambda r^2) p_r^2 + alpha^2 W1(r)
//               + (1 - r^2)/r^2 * I2   (= 2H - I2)
// H = (I1 + I2)/2 holds identically in every chart.
std::pair<double, double> chart_integrals(const Chart& c, const SeparablePotential& sp,
                                          const PhaseState& s, double alpha);

// H(lambda) = H1 + H2 - lambda H3 with
// H1 = ((1+lambda r^2) p_x^2 + alpha^2 x^2/(1+lambda r^2))/2 (H2 mirrored),
// H3 = J^2/2.  Each term Poisson-commutes with H.
struct OscillatorDecomposition {
    double H1;
    double H2;
    double H3;
};
OscillatorDecomposition decompose_oscillator(double lambda, double alpha,
                                             const PhaseState& s);

// H_{lambda,k} = H_px + H_py - lambda H_J with
// H_px = ((1+lambda r^2) p_x^2 + alpha^2 x^2/(1+lambda r^2))/2
//        + k2 (1+lambda y^2)/x^2   (H_py mirrored),
// H_J  = J^2/2 + k2 y^2/x^2 + k3 x^2/y^2.
struct SWDecomposition {
    double Hpx;
    double Hpy;
    double HJ;
};
SWDecomposition decompose_sw(double lambda, double alpha, double k2, double k3,
                             const PhaseState& s);

// The deformed Smorodinsky-Winternitz potential written in the zx_y, x_zy and
// polar charts; the three values agree with potential_2d identically.
struct PotentialForms {
    double v_zx;
    double v_zy;
    double v_polar;
};
PotentialForms sw_potential_three_forms(double lambda, double alpha, double k2,
                                        double k3, double x, double y);

// Oscillator Lagrangian on the curvature-kappa plane in gnomonic (Beltrami)
// coordinates:
// L = [v^2 - kappa (x vx + y vy)^2/(1+kappa r^2)] / (2 (1+kappa r^2))
//     - alpha^2 r^2 / 2.
// Under r' = Tan_k(rho) this equals the geodesic-polar Lagrangian at matched
// data.
double higgs_lagrangian(double kappa, double x, double y, double vx, double vy,
                        double alpha);

} // namespace losc::separability
