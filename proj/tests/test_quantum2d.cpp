#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "losc/grid.hpp"
#include "losc/quantum1d.hpp"
#include "losc/quantum2d.hpp"

using namespace losc;
using namespace losc::quantum2d;
using doctest::Approx;

TEST_CASE("G factor") {
    CHECK(g_factor(0.0, 3.7) == 1.0);
    // mu_2 = 2 * 0.9 + 0.5 = 2.3 and G = 1 - 2 Lambda
    CHECK(g_factor(0.1, 2.3) == Approx(0.8).epsilon(1e-14));
    CHECK_THROWS_AS(g_factor(1.0, 2.0), ImaginaryGError);
}

TEST_CASE("quantized separation constant") {
    CHECK(nu_quantized(0.0, 1.0, 0) == Approx(0.5));
    CHECK(nu_quantized(0.1, 0.8, 1) == Approx(1.1));
    for (double L : {-0.3, 0.2})
        for (int n : {0, 2, 5}) {
            const double G = 0.9;
            const double nu = nu_quantized(L, G, n);
            CHECK(2.0 * nu + n * (n + 1) * L - G * (2 * n + 1) == Approx(0.0));
        }
}

TEST_CASE("2D closed-form spectrum") {
    CHECK(energy_2d(0.0, 2, 3) == Approx(6.0));
    CHECK(energy_2d(0.1, 1, 2) == Approx(3.4));
    SUBCASE("degeneracy in m + n") {
        for (int m = 0; m <= 3; ++m)
            CHECK(energy_2d(0.2, m, 3 - m) == Approx(2.8).epsilon(1e-14));
    }
    SUBCASE("additivity mu_m + nu_n") {
        for (double L : {-0.3, -0.1, 0.1, 0.3})
            for (int m = 0; m <= 10; ++m)
                for (int n = 0; n <= 10; ++n) {
                    if (L > 0.0) {
                        // admissibility: G real/positive and the 1D bound
                        // condition at N = m + n
                        if (1.0 - L * m <= 0.0 ||
                            m + n > static_cast<int>(std::floor(2.0 / L + 1e-9))) {
                            CHECK_THROWS_AS(energy_2d(L, m, n), NotBoundStateError);
                            continue;
                        }
                    }
                    const double mu = quantum1d::energy_series(L, m);
                    const double nu = nu_quantized(L, g_factor(L, mu), n);
                    CHECK(energy_2d(L, m, n) == Approx(mu + nu).epsilon(1e-12));
                }
    }
}

TEST_CASE("deformed Hermite polynomials") {
    SUBCASE("degree 0") {
        const auto q = deformed_hermite(0.4, 0.7, 0);
        CHECK(q(1.3) == 1.0);
    }
    SUBCASE("flat degree 3") {
        const auto q = deformed_hermite(0.0, 1.0, 3);
        CHECK(q.coefficients[1] == 1.0);
        CHECK(q.coefficients[3] == Approx(-2.0 / 3.0));
        CHECK_FALSE(q.even_parity);
    }
    SUBCASE("deformed degree 2 worked row") {
        const auto q = deformed_hermite(0.2, 0.8, 2);
        CHECK(q.coefficients[2] / q.coefficients[0] == Approx(-1.0));
        for (double y : {-1.5, -0.2, 0.4, 1.1})
            CHECK(std::fabs(hermite_ode_residual(q, y)) < 1e-10);
    }
    SUBCASE("ODE residual across degrees and deformations") {
        for (double L : {-0.15, 0.1, 0.3})
            for (int n = 0; n <= 8; ++n) {
                const double G = 0.9;
                const auto q = deformed_hermite(L, G, n);
                CHECK(q.degree == n);
                for (int s = 0; s < 50; ++s) {
                    const double y = -2.0 + 4.0 * s / 49.0;
                    CHECK(std::fabs(hermite_ode_residual(q, y)) < 1e-10);
                }
            }
    }
    SUBCASE("flat limit reproduces classical Hermite coefficient ratios") {
        // integer Hermite coefficients by H_{n+1} = 2 y H_n - 2 n H_{n-1}
        std::vector<std::vector<double>> H{{1.0}, {0.0, 2.0}};
        for (int n = 1; n <= 8; ++n) {
            std::vector<double> next(n + 2, 0.0);
            for (int k = 0; k <= n; ++k) next[k + 1] += 2.0 * H[n][k];
            for (int k = 0; k < n; ++k) next[k] -= 2.0 * n * H[n - 1][k];
            H.push_back(next);
        }
        for (int n = 1; n <= 8; ++n) {
            const auto q = deformed_hermite(0.0, 1.0, n);
            const int s = n % 2;
            for (int k = s; k <= n; k += 2)
                CHECK(q.coefficients[k] * H[n][s] ==
                      Approx(H[n][k] * q.coefficients[s]).epsilon(1e-14));
        }
    }
}

TEST_CASE("transverse Y modes are orthogonal with unit weight") {
    // self-adjoint form ((1 + L y^2) Y')' + (2 nu - ...) Y = 0 => w(y) = 1
    SUBCASE("Lambda = 0.1") {
        const double L = 0.1, G = 1.0;
        // Y6 only decays like y^(6 - G/Lambda) = y^(-4); the box must be wide
        // for the truncated tails not to pollute the overlaps
        const grid::GridSpec g{-80.0, 80.0, 32001};
        std::vector<grid::GridFunction> Y;
        for (int n = 0; n <= 6; ++n) {
            auto f = grid::GridFunction::sample(
                g, [&](double y) { return y_mode(L, G, n, y); });
            grid::GridFunction sq{g, std::vector<double>(g.points), 0};
            for (int i = 0; i < g.points; ++i) sq.values[i] = f.values[i] * f.values[i];
            const double norm = std::sqrt(grid::simpson(sq));
            for (auto& v : f.values) v /= norm;
            Y.push_back(std::move(f));
        }
        for (int m = 0; m <= 6; ++m)
            for (int n = m + 1; n <= 6; ++n) {
                grid::GridFunction prod{g, std::vector<double>(g.points), 0};
                for (int i = 0; i < g.points; ++i)
                    prod.values[i] = Y[m].values[i] * Y[n].values[i];
                CHECK(std::fabs(grid::simpson(prod)) < 1e-8);
            }
    }
    SUBCASE("Lambda = -0.2") {
        const double L = -0.2, G = 1.0;
        const grid::GridSpec g{-2.23, 2.23, 6001};
        for (int m = 0; m <= 4; ++m)
            for (int n = m + 1; n <= 4; ++n) {
                grid::GridFunction prod{g, std::vector<double>(g.points), 0};
                grid::GridFunction am{g, std::vector<double>(g.points), 0};
                grid::GridFunction an{g, std::vector<double>(g.points), 0};
                for (int i = 0; i < g.points; ++i) {
                    const double y = g.x(i);
                    am.values[i] = y_mode(L, G, m, y) * y_mode(L, G, m, y);
                    an.values[i] = y_mode(L, G, n, y) * y_mode(L, G, n, y);
                    prod.values[i] = y_mode(L, G, m, y) * y_mode(L, G, n, y);
                }
                const double norm =
                    std::sqrt(grid::simpson(am) * grid::simpson(an));
                CHECK(std::fabs(grid::simpson(prod)) / norm < 1e-8);
            }
    }
}

TEST_CASE("2D wavefunctions") {
    SUBCASE("harmonic limit of the ground state") {
        const double L = 1e-8;
        const double scale = wavefunction_2d(L, 0, 0, 0.0, 0.0);
        for (double x : {0.0, 0.7, 1.5})
            for (double y : {0.3, -1.2})
                CHECK(std::fabs(wavefunction_2d(L, 0, 0, x, y) / scale -
                                std::exp(-0.5 * (x * x + y * y))) < 1e-6);
    }
    SUBCASE("parity in each factor") {
        const double L = -0.2;
        for (double x : {0.3, 1.1})
            for (double y : {0.4, 0.9}) {
                const double v = wavefunction_2d(L, 0, 1, x, y);
                CHECK(std::fabs(wavefunction_2d(L, 0, 1, -x, y) - v) < 1e-12);
                CHECK(std::fabs(wavefunction_2d(L, 0, 1, x, -y) + v) < 1e-12);
            }
    }
}

namespace {

double interior_norm(const GridFunction2D& f, int margin) {
    double s = 0.0;
    for (int j = margin; j < f.spec.ny - margin; ++j)
        for (int i = margin; i < f.spec.nx - margin; ++i)
            s += f.at(i, j) * f.at(i, j);
    return std::sqrt(s);
}

// deterministic smooth test function: a few wide gaussian bumps
double smooth_bumps(double x, double y) {
    return std::exp(-(x * x + y * y) / 8.0) +
           0.6 * std::exp(-((x - 0.4) * (x - 0.4) + (y + 0.3) * (y + 0.3)) / 6.0) -
           0.3 * std::exp(-((x + 0.5) * (x + 0.5) + y * y) / 7.0);
}

} // namespace

TEST_CASE("2D Hamiltonian on the grid") {
    SUBCASE("flat gaussian ground state") {
        Grid2DSpec g{-7.0, 7.0, -7.0, 7.0, 601, 601};
        const auto psi = GridFunction2D::sample(g, [](double x, double y) {
            return std::exp(-0.5 * (x * x + y * y));
        });
        const auto h = apply_hamiltonian_2d(0.0, psi);
        for (int j = h.margin; j < g.ny - h.margin; ++j)
            for (int i = h.margin; i < g.nx - h.margin; ++i)
                CHECK(std::fabs(h.at(i, j) - 1.0 * psi.at(i, j)) < 1e-7);
    }
    SUBCASE("component assembly identity") {
        const double L = 0.15;
        Grid2DSpec g{-4.0, 4.0, -4.0, 4.0, 101, 101};
        const auto psi = GridFunction2D::sample(g, smooth_bumps);
        const auto full = apply_hamiltonian_2d(L, psi);
        const auto h1 = apply_h1_2d(L, psi);
        const auto h2 = apply_h2_2d(L, psi);
        const auto jsq = apply_jsq_2d(psi);
        const int m = full.margin;
        for (int j = m; j < g.ny - m; ++j)
            for (int i = m; i < g.nx - m; ++i)
                CHECK(std::fabs(full.at(i, j) -
                                (h1.at(i, j) + h2.at(i, j) - L * jsq.at(i, j))) <
                      1e-12);
    }
    SUBCASE("eigen-residual of the (1,1) state") {
        const double L = 0.1;
        Grid2DSpec g{-6.0, 6.0, -6.0, 6.0, 401, 401};
        const auto psi = GridFunction2D::sample(g, [&](double x, double y) {
            return wavefunction_2d(L, 1, 1, x, y);
        });
        const auto h = apply_hamiltonian_2d(L, psi);
        const double e = energy_2d(L, 1, 1);
        CHECK(e == Approx(2.7));
        GridFunction2D res = h;
        for (int j = h.margin; j < g.ny - h.margin; ++j)
            for (int i = h.margin; i < g.nx - h.margin; ++i)
                res.at(i, j) = h.at(i, j) - e * psi.at(i, j);
        CHECK(interior_norm(res, h.margin) / interior_norm(psi, h.margin) < 1e-5);
    }
}

TEST_CASE("angular momentum kills rotationally symmetric functions") {
    Grid2DSpec g{-5.0, 5.0, -5.0, 5.0, 401, 401};
    const auto psi = GridFunction2D::sample(
        g, [](double x, double y) { return std::exp(-0.4 * (x * x + y * y)); });
    const auto j = apply_j_2d(psi);
    for (int jj = j.margin; jj < g.ny - j.margin; ++jj)
        for (int ii = j.margin; ii < g.nx - j.margin; ++ii)
            CHECK(std::fabs(j.at(ii, jj)) < 1e-7);
}

TEST_CASE("the three compatible observable sets commute") {
    Grid2DSpec g{-5.0, 5.0, -5.0, 5.0, 513, 513};
    const auto psi = GridFunction2D::sample(g, smooth_bumps);
    for (double L : {0.0, 0.1}) {
        const auto sets = compatible_sets(L);
        REQUIRE(sets.size() == 3);
        for (const auto& s : sets)
            CHECK(commutator_residual(s.first, s.second, psi) < 1e-6);
    }
}
