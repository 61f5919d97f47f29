#pragma once

// Curvature-dependent trigonometry.  The kernel functions unify circular
// (kappa > 0), flat (kappa = 0) and hyperbolic (kappa < 0) trigonometry and
// back the geodesic changes of variable used by the rest of the library.
// The deformation parameter of the oscillator models relates to the
// curvature through lambda = -kappa.

#include "losc/errors.hpp"

namespace losc::ktrig {

// Switch to a truncated Taylor series in kappa*x^2 below this threshold to
// keep sin_k/cos_k continuous through kappa = 0.
inline constexpr double kSeriesThreshold = 1e-8;

// |cos_k| below this is treated as a genuine pole of tan_k.
inline constexpr double kPoleThreshold = 1e-13;

// Cos_k(x): cos(sqrt(k) x), 1, or cosh(sqrt(-k) x) by the sign of kappa.
double cos_k(double kappa, double x);

// Sin_k(x): sin(sqrt(k) x)/sqrt(k), x, or sinh(sqrt(-k) x)/sqrt(-k).
double sin_k(double kappa, double x);

// Tan_k = Sin_k / Cos_k.  Throws PoleError when Cos_k vanishes.
double tan_k(double kappa, double x);

// Curvature value type.  Keeps the lambda <-> kappa sign convention in one
// place: lambda = -kappa.
struct Curvature {
    double kappa = 0.0;

    static Curvature from_kappa(double k) { return Curvature{k}; }
    static Curvature from_lambda(double lambda) { return Curvature{-lambda}; }
    double lambda() const { return -kappa; }
};

// Geodesic coordinate u of the point x, defined by x = Sin_{-lambda}(u) on
// the principal branch (u and x share sign, u = 0 at x = 0).  For lambda < 0
// the admissible region is |x| < 1/sqrt(|lambda|).
double to_geodesic(double lambda, double x);

// Inverse of to_geodesic: x = Sin_{-lambda}(u).
double from_geodesic(double lambda, double u);

} // namespace losc::ktrig
