#include "losc/grid.hpp"

#include <algorithm>
#include <string>

namespace losc::grid {

void check_resolution(const GridFunction& f, double tol) {
    const int n = f.size();
    if (n < 5 + 2 * f.margin) throw GridTooCoarse("check_resolution: too few valid points");
    const double h = f.spec.dx();
    const auto& v = f.values;
    double max_f = 0.0, max_d4 = 0.0;
    for (int i = f.margin; i < n - f.margin; ++i)
        max_f = std::max(max_f, std::fabs(v[i]));
    for (int i = f.margin + 2; i < n - f.margin - 2; ++i) {
        const double d4 =
            (v[i - 2] - 4.0 * v[i - 1] + 6.0 * v[i] - 4.0 * v[i + 1] + v[i + 2]) /
            (h * h * h * h);
        max_d4 = std::max(max_d4, std::fabs(d4));
    }
    if (max_f == 0.0) return;
    const double estimate = h * h * max_d4 / max_f;
    if (estimate > tol)
        throw GridTooCoarse("check_resolution: dx^2 max|f''''|/max|f| = " +
                            std::to_string(estimate));
}

} // namespace losc::grid
