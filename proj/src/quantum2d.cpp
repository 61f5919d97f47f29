#include "losc/quantum2d.hpp"

#include <cmath>
#include <string>

#include "losc/quantum1d.hpp"

namespace losc::quantum2d {

namespace {

// 4th-order central first-derivative weights over offsets -2..2, / h.
constexpr double kD1[5] = {1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0};
// Second derivative, / h^2.
constexpr double kD2[5] = {-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0,
                           -1.0 / 12.0};

double envelope(double Lambda, double G, double y) {
    if (Lambda == 0.0) return std::exp(-0.5 * G * y * y);
    const double z = Lambda * y * y;
    if (z <= -1.0) throw DomainError("y_mode: 1 + Lambda y^2 <= 0");
    return std::exp(-G * std::log1p(z) / (2.0 * Lambda));
}

void require_disk(double Lambda, const Grid2DSpec& g) {
    if (Lambda >= 0.0) return;
    const double bound2 = -1.0 / Lambda;
    const double mx = std::max(std::fabs(g.ax), std::fabs(g.bx));
    const double my = std::max(std::fabs(g.ay), std::fabs(g.by));
    if (mx * mx + my * my >= bound2)
        throw DomainError("grid corners leave the disk 1 + Lambda r^2 > 0");
}

struct Stencil2D {
    double hx, hy;
    const GridFunction2D* psi;

    double d1x(int i, int j) const {
        double s = 0.0;
        for (int a = -2; a <= 2; ++a) s += kD1[a + 2] * psi->at(i + a, j);
        return s / hx;
    }
    double d1y(int i, int j) const {
        double s = 0.0;
        for (int b = -2; b <= 2; ++b) s += kD1[b + 2] * psi->at(i, j + b);
        return s / hy;
    }
    double d2x(int i, int j) const {
        double s = 0.0;
        for (int a = -2; a <= 2; ++a) s += kD2[a + 2] * psi->at(i + a, j);
        return s / (hx * hx);
    }
    double d2y(int i, int j) const {
        double s = 0.0;
        for (int b = -2; b <= 2; ++b) s += kD2[b + 2] * psi->at(i, j + b);
        return s / (hy * hy);
    }
    double dxy(int i, int j) const {
        double s = 0.0;
        for (int b = -2; b <= 2; ++b) {
            if (kD1[b + 2] == 0.0) continue;
            double row = 0.0;
            for (int a = -2; a <= 2; ++a) row += kD1[a + 2] * psi->at(i + a, j + b);
            s += kD1[b + 2] * row;
        }
        return s / (hx * hy);
    }
};

enum class Piece { full, h1, h2, jsq, j };

double evaluate_piece(Piece piece, double L, const Stencil2D& st, int i, int j) {
    const auto& psi = *st.psi;
    const double x = psi.spec.x(i), y = psi.spec.y(j);
    const double r2 = x * x + y * y;
    const double m = 1.0 + L * r2;
    switch (piece) {
        case Piece::h1:
            return -0.5 * (m * st.d2x(i, j) + L * x * st.d1x(i, j)) +
                   0.5 * (1.0 + L) * x * x / m * psi.at(i, j);
        case Piece::h2:
            return -0.5 * (m * st.d2y(i, j) + L * y * st.d1y(i, j)) +
                   0.5 * (1.0 + L) * y * y / m * psi.at(i, j);
        case Piece::jsq:
            return -0.5 * (x * x * st.d2y(i, j) + y * y * st.d2x(i, j) -
                           2.0 * x * y * st.dxy(i, j) - x * st.d1x(i, j) -
                           y * st.d1y(i, j));
        case Piece::j:
            return x * st.d1y(i, j) - y * st.d1x(i, j);
        case Piece::full:
            return evaluate_piece(Piece::h1, L, st, i, j) +
                   evaluate_piece(Piece::h2, L, st, i, j) -
                   L * evaluate_piece(Piece::jsq, L, st, i, j);
    }
    throw ConfigError("evaluate_piece: bad piece");
}

GridFunction2D apply_piece(Piece piece, double Lambda, const GridFunction2D& psi,
                           bool parallel) {
    require_disk(Lambda, psi.spec);
    const int nx = psi.spec.nx, ny = psi.spec.ny;
    const int margin = psi.margin + 2;
    if (nx < 2 * margin + 1 || ny < 2 * margin + 1)
        throw GridTooCoarse("apply_hamiltonian_2d: too few valid rows");
    GridFunction2D out{psi.spec,
                       std::vector<double>(static_cast<std::size_t>(nx) * ny, 0.0),
                       margin};
    const Stencil2D st{psi.spec.dx(), psi.spec.dy(), &psi};
    // Rows are independent; scheduling only changes row order, so the
    // parallel result is bitwise identical to the serial one.
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = margin; j < ny - margin; ++j)
        for (int i = margin; i < nx - margin; ++i)
            out.at(i, j) = evaluate_piece(piece, Lambda, st, i, j);
    return out;
}

} // namespace

GridFunction2D GridFunction2D::sample(const Grid2DSpec& g,
                                      const std::function<double(double, double)>& f) {
    GridFunction2D out{g, std::vector<double>(static_cast<std::size_t>(g.nx) * g.ny), 0};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out.at(i, j) = f(g.x(i), g.y(j));
    return out;
}

double g_factor(double Lambda, double mu) {
    const double radicand = 1.0 + (1.0 - 2.0 * mu) * Lambda;
    if (radicand < 0.0)
        throw ImaginaryGError("g_factor: 1 + (1 - 2 mu) Lambda = " +
                              std::to_string(radicand) + " < 0");
    return std::sqrt(radicand);
}

double nu_quantized(double Lambda, double G, int n) {
    if (n < 0) throw DomainError("nu_quantized: n must be >= 0");
    return 0.5 * (G * (2.0 * n + 1.0) - n * (n + 1.0) * Lambda);
}

double energy_2d(double Lambda, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("energy_2d: m, n must be >= 0");
    const double G = 1.0 - Lambda * m;
    if (G <= 0.0)
        throw NotBoundStateError("energy_2d: G = 1 - Lambda m <= 0 at m = " +
                                 std::to_string(m));
    if (Lambda > 0.0) {
        const long N = m + n;
        const long nmax = static_cast<long>(std::floor(2.0 / Lambda + 1e-9));
        if (N > nmax)
            throw NotBoundStateError("energy_2d: m + n exceeds the bound index " +
                                     std::to_string(nmax));
    }
    const double N = m + n;
    return (N + 1.0) * (1.0 - 0.5 * Lambda * N);
}

double DeformedHermite::operator()(double y) const {
    double s = 0.0;
    for (int k = degree; k >= 0; --k) s = s * y + coefficients[k];
    return s;
}

double DeformedHermite::derivative(double y) const {
    double s = 0.0;
    for (int k = degree; k >= 1; --k) s = s * y + k * coefficients[k];
    return s;
}

double DeformedHermite::second_derivative(double y) const {
    double s = 0.0;
    for (int k = degree; k >= 2; --k) s = s * y + k * (k - 1.0) * coefficients[k];
    return s;
}

DeformedHermite deformed_hermite(double Lambda, double G, int n) {
    if (n < 0) throw DomainError("deformed_hermite: n must be >= 0");
    DeformedHermite q;
    q.degree = n;
    q.Lambda = Lambda;
    q.G = G;
    q.nu = nu_quantized(Lambda, G, n);
    q.even_parity = (n % 2 == 0);
    q.coefficients.assign(static_cast<std::size_t>(n) + 1, 0.0);
    const int s = n % 2;
    q.coefficients[s] = 1.0;
    for (int k = s; k + 2 <= n; k += 2) {
        const double factor = Lambda * k * (k + 1.0) - G * (2.0 * k + 1.0) + 2.0 * q.nu;
        q.coefficients[k + 2] =
            -q.coefficients[k] * factor / ((k + 2.0) * (k + 1.0));
    }
    if (q.coefficients[n] == 0.0)
        throw DegenerateRecursionError(
            "deformed_hermite: recursion collapsed below degree " + std::to_string(n));
    return q;
}

double hermite_ode_residual(const DeformedHermite& q, double y) {
    return (1.0 + q.Lambda * y * y) * q.second_derivative(y) +
           2.0 * (q.Lambda - q.G) * y * q.derivative(y) +
           (2.0 * q.nu - q.G) * q(y);
}

double y_mode(double Lambda, double G, int n, double y) {
    const auto q = deformed_hermite(Lambda, G, n);
    return q(y) * envelope(Lambda, G, y);
}

double wavefunction_2d(double Lambda, int m, int n, double x, double y) {
    const double mu_m = quantum1d::energy_series(Lambda, m);
    const double G = g_factor(Lambda, mu_m); // equals 1 - Lambda m
    const double my = 1.0 + Lambda * y * y;
    if (my <= 0.0) throw DomainError("wavefunction_2d: 1 + Lambda y^2 <= 0");
    const double z = x / std::sqrt(my);
    return quantum1d::series_eigenfunction(Lambda, m, z) * y_mode(Lambda, G, n, y);
}

GridFunction2D apply_hamiltonian_2d(double Lambda, const GridFunction2D& psi) {
    return apply_piece(Piece::full, Lambda, psi, true);
}

GridFunction2D apply_hamiltonian_2d_serial(double Lambda, const GridFunction2D& psi) {
    return apply_piece(Piece::full, Lambda, psi, false);
}

GridFunction2D apply_h1_2d(double Lambda, const GridFunction2D& psi) {
    return apply_piece(Piece::h1, Lambda, psi, true);
}

GridFunction2D apply_h2_2d(double Lambda, const GridFunction2D& psi) {
    return apply_piece(Piece::h2, Lambda, psi, true);
}

GridFunction2D apply_jsq_2d(const GridFunction2D& psi) {
    return apply_piece(Piece::jsq, 0.0, psi, true);
}

GridFunction2D apply_j_2d(const GridFunction2D& psi) {
    return apply_piece(Piece::j, 0.0, psi, true);
}

std::vector<ObservablePair> compatible_sets(double Lambda) {
    auto h1 = [Lambda](const GridFunction2D& f) { return apply_h1_2d(Lambda, f); };
    auto h2 = [Lambda](const GridFunction2D& f) { return apply_h2_2d(Lambda, f); };
    auto jsq = [](const GridFunction2D& f) { return apply_jsq_2d(f); };
    auto sub = [](GridFunction2D a, const GridFunction2D& b, double c) {
        for (std::size_t k = 0; k < a.values.size(); ++k)
            a.values[k] -= c * b.values[k];
        a.margin = std::max(a.margin, b.margin);
        return a;
    };
    std::vector<ObservablePair> out;
    out.push_back({"{H1, H2 - L J^2}", h1, [=](const GridFunction2D& f) {
                       return sub(h2(f), jsq(f), Lambda);
                   }});
    out.push_back({"{H1 - L J^2, H2}",
                   [=](const GridFunction2D& f) { return sub(h1(f), jsq(f), Lambda); },
                   h2});
    out.push_back({"{H1 + H2, J}",
                   [=](const GridFunction2D& f) { return sub(h1(f), h2(f), -1.0); },
                   [](const GridFunction2D& f) { return apply_j_2d(f); }});
    return out;
}

double commutator_residual(const std::function<GridFunction2D(const GridFunction2D&)>& A,
                           const std::function<GridFunction2D(const GridFunction2D&)>& B,
                           const GridFunction2D& psi) {
    const auto ab = A(B(psi));
    const auto ba = B(A(psi));
    const int margin = std::max(ab.margin, ba.margin);
    const int nx = psi.spec.nx, ny = psi.spec.ny;
    double num = 0.0, den = 0.0;
    for (int j = margin; j < ny - margin; ++j)
        for (int i = margin; i < nx - margin; ++i) {
            const double d = ab.at(i, j) - ba.at(i, j);
            num += d * d;
            den += psi.at(i, j) * psi.at(i, j);
        }
    if (den == 0.0) throw DomainError("commutator_residual: zero test function");
    return std::sqrt(num / den);
}

} // namespace losc::quantum2d
