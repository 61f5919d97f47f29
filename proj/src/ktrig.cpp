#include "losc/ktrig.hpp"

#include <cmath>
#include <string>

namespace losc::ktrig {

double cos_k(double kappa, double x) {
    const double z = kappa * x * x;
    if (std::fabs(z) < kSeriesThreshold) {
        // cos_k = 1 - z/2 + z^2/24 - z^3/720 + ...
        return 1.0 - z / 2.0 + z * z / 24.0;
    }
    if (kappa > 0.0) return std::cos(std::sqrt(kappa) * x);
    return std::cosh(std::sqrt(-kappa) * x);
}

double sin_k(double kappa, double x) {
    const double z = kappa * x * x;
    if (std::fabs(z) < kSeriesThreshold) {
        // sin_k = x (1 - z/6 + z^2/120 - ...)
        return x * (1.0 - z / 6.0 + z * z / 120.0);
    }
    if (kappa > 0.0) {
        const double s = std::sqrt(kappa);
        return std::sin(s * x) / s;
    }
    const double s = std::sqrt(-kappa);
    return std::sinh(s * x) / s;
}

double tan_k(double kappa, double x) {
    const double c = cos_k(kappa, x);
    if (std::fabs(c) < kPoleThreshold)
        throw PoleError("Tan_k pole: Cos_k(" + std::to_string(kappa) + ", " +
                        std::to_string(x) + ") vanishes");
    return sin_k(kappa, x) / c;
}

double to_geodesic(double lambda, double x) {
    const double kappa = -lambda;
    const double z = kappa * x * x;
    if (std::fabs(z) < kSeriesThreshold) {
        // Inverse series of x = sin_k(u): u = x (1 + z/6 + 3 z^2/40 + ...)
        return x * (1.0 + z / 6.0 + 3.0 * z * z / 40.0);
    }
    if (kappa > 0.0) {
        // lambda < 0: x = sin(s u)/s requires |x| < 1/s.
        const double s = std::sqrt(kappa);
        if (std::fabs(x) >= 1.0 / s)
            throw DomainError("to_geodesic: |x| >= 1/sqrt(|lambda|) for lambda < 0");
        return std::asin(s * x) / s;
    }
    const double s = std::sqrt(-kappa);
    return std::asinh(s * x) / s;
}

double from_geodesic(double lambda, double u) {
    return sin_k(-lambda, u);
}

} // namespace losc::ktrig
