#pragma once

// Uniform-grid sampled functions, 4th-order finite-difference stencils and
// Simpson quadrature.  Grid operators mark a boundary margin of invalid rows
// instead of inventing one-sided values.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "losc/errors.hpp"

namespace losc::grid {

struct GridSpec {
    enum class Boundary { dirichlet, natural_truncation };
    double a = -10.0;
    double b = 10.0;
    int points = 1001;
    Boundary boundary = Boundary::natural_truncation;

    double dx() const { return (b - a) / (points - 1); }
    double x(int i) const { return a + i * dx(); }
};

struct GridFunction {
    GridSpec spec;
    std::vector<double> values;
    // Rows [0, margin) and [n - margin, n) hold no valid data.
    int margin = 0;

    static GridFunction sample(const GridSpec& g, const std::function<double(double)>& f) {
        GridFunction out{g, std::vector<double>(g.points), 0};
        for (int i = 0; i < g.points; ++i) out.values[i] = f(g.x(i));
        return out;
    }
    int size() const { return spec.points; }
};

// 4th-order central first derivative; widens the invalid margin by 2.
inline GridFunction deriv1(const GridFunction& f) {
    const int n = f.size();
    if (n < 5) throw GridTooCoarse("deriv1: need at least 5 points");
    const double h = f.spec.dx();
    GridFunction out{f.spec, std::vector<double>(n, 0.0), f.margin + 2};
    const auto& v = f.values;
    for (int i = f.margin + 2; i < n - f.margin - 2; ++i)
        out.values[i] =
            (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) / (12.0 * h);
    return out;
}

// 4th-order central second derivative; widens the invalid margin by 2.
inline GridFunction deriv2(const GridFunction& f) {
    const int n = f.size();
    if (n < 5) throw GridTooCoarse("deriv2: need at least 5 points");
    const double h = f.spec.dx();
    GridFunction out{f.spec, std::vector<double>(n, 0.0), f.margin + 2};
    const auto& v = f.values;
    for (int i = f.margin + 2; i < n - f.margin - 2; ++i)
        out.values[i] = (-v[i - 2] + 16.0 * v[i - 1] - 30.0 * v[i] + 16.0 * v[i + 1] -
                         v[i + 2]) /
                        (12.0 * h * h);
    return out;
}

// Composite Simpson integral over the full grid (trapezoid patch on the last
// interval when the point count is even).
inline double simpson(const GridFunction& f) {
    const int n = f.size();
    if (n < 3) throw GridTooCoarse("simpson: need at least 3 points");
    const double h = f.spec.dx();
    const auto& v = f.values;
    const int last = (n % 2 == 1) ? n - 1 : n - 2;
    double s = v[0] + v[last];
    for (int i = 1; i < last; i += 2) s += 4.0 * v[i];
    for (int i = 2; i < last; i += 2) s += 2.0 * v[i];
    s *= h / 3.0;
    if (n % 2 == 0) s += 0.5 * h * (v[n - 2] + v[n - 1]);
    return s;
}

// Throws GridTooCoarse when the estimated truncation error of the 4th-order
// stencils, dx^2 * max|f''''| relative to max|f|, exceeds tol.
void check_resolution(const GridFunction& f, double tol = 1e-2);

} // namespace losc::grid
