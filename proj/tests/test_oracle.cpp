#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "losc/classical.hpp"
#include "losc/oracle.hpp"

using namespace losc;
using namespace losc::oracle;
using doctest::Approx;

TEST_CASE("harmonic spectrum, lambda = 0") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, 0.0);
    const auto r = sturm_liouville_eigen(qp, 4);
    REQUIRE(r.entries.size() == 4);
    for (int n = 0; n < 4; ++n) {
        CHECK(r.entries[n].converged);
        CHECK(std::fabs(r.entries[n].eigenvalue - (n + 0.5)) < 1e-6);
    }
    CHECK(std::isinf(r.continuum_edge));
    CHECK_FALSE(r.symmetrization.empty());
}

TEST_CASE("lambda < 0 spectrum matches the ladder formula") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, -0.3);
    const auto r = sturm_liouville_eigen(qp, 3);
    const double expect[] = {0.5, 1.65, 3.1};
    for (int n = 0; n < 3; ++n) {
        CHECK(r.entries[n].converged);
        CHECK(std::fabs(r.entries[n].eigenvalue - expect[n]) < 1e-4);
        // Richardson error estimate brackets the true discrepancy
        CHECK(std::fabs(r.entries[n].eigenvalue - expect[n]) <
              5.0 * std::max(r.entries[n].two_grid_error, 1e-9));
    }
}

TEST_CASE("lambda > 0: continuum edge flags unbound entries") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, 0.4);
    const auto r = sturm_liouville_eigen(qp, 6);
    CHECK(r.continuum_edge == Approx(1.75)); // alpha^2 / (2 lambda)
    const double expect[] = {0.5, 1.3, 1.7};
    for (int n = 0; n < 3; ++n) {
        CHECK(r.entries[n].converged);
        CHECK(std::fabs(r.entries[n].eigenvalue - expect[n]) < 1e-4);
    }
    for (int n = 3; n < 6; ++n) CHECK_FALSE(r.entries[n].converged);
}

TEST_CASE("requesting too many eigenvalues for the grid is rejected") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, 0.0);
    SturmLiouvilleOptions opt;
    opt.points = 200;
    CHECK_THROWS_AS(sturm_liouville_eigen(qp, 30, opt), ConfigError);
}

TEST_CASE("eigenvectors are orthonormal in the solver measure") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, -0.3);
    const auto r = sturm_liouville_eigen(qp, 4);
    REQUIRE(r.vectors.size() >= 4);
    const double h = r.u_grid.dx();
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.vectors[a].size(); ++i)
                s += r.vectors[a][i] * r.vectors[b][i];
            s *= h;
            CHECK(std::fabs(s - (a == b ? 1.0 : 0.0)) < 1e-8);
        }
}

TEST_CASE("grid refinement converges at 4th order") {
    const auto qp = quantum1d::QuantumParams::from_beta(1.0, -0.3);
    SturmLiouvilleOptions coarse, fine;
    coarse.points = 600;
    fine.points = 1200;
    const double e_coarse = sturm_liouville_eigen(qp, 3, coarse).entries[2].two_grid_error;
    const double e_fine = sturm_liouville_eigen(qp, 3, fine).entries[2].two_grid_error;
    const double exponent = std::log2(e_coarse / e_fine);
    CHECK(exponent > 3.5);
    CHECK(exponent < 4.5);
}

TEST_CASE("measure-weighted quadrature") {
    SUBCASE("arcsin mass at lambda = -1") {
        const double eps = 0.01;
        const grid::GridSpec g{-1.0 + eps, 1.0 - eps, 20001};
        const auto one = grid::GridFunction::sample(g, [](double) { return 1.0; });
        CHECK(quadrature_mu(one, -1.0) ==
              Approx(2.0 * std::asin(1.0 - eps)).epsilon(1e-8));
        const grid::GridSpec g2{-1.0 + eps / 4, 1.0 - eps / 4, 80001};
        const auto one2 = grid::GridFunction::sample(g2, [](double) { return 1.0; });
        // tightening the truncation walks the mass toward pi
        CHECK(std::fabs(quadrature_mu(one2, -1.0) - M_PI) <
              std::fabs(quadrature_mu(one, -1.0) - M_PI));
    }
    SUBCASE("odd integrand vanishes") {
        const grid::GridSpec g{-4.0, 4.0, 2001};
        const auto f = grid::GridFunction::sample(
            g, [](double x) { return x * std::exp(-x * x); });
        CHECK(std::fabs(quadrature_mu(f, 0.7)) < 1e-14);
    }
    SUBCASE("ground-state norm is finite and positive") {
        const grid::GridSpec g{-25.0, 25.0, 8001};
        const auto f = grid::GridFunction::sample(g, [](double x) {
            const double p = quantum1d::ground_state_unnormalized(1.0, 0.5, x);
            return p * p;
        });
        const double n2 = quadrature_mu(f, 0.5);
        CHECK(n2 > 0.0);
        CHECK(std::isfinite(n2));
    }
}

TEST_CASE("Euler-Lagrange residual checks") {
    const double dt = 5e-3;
    SUBCASE("deformed oscillator exact path") {
        const ModelParams1D p{0.7, 1.2, 0.0};
        std::vector<double> path;
        for (int i = 0; i <= 3000; ++i)
            path.push_back(classical::ml_exact_solution(p, 0.9, 0.3, i * dt).x);
        auto L = [&](double x, double v) { return classical::lagrangian_1d(p, x, v); };
        // floor set by roundoff in the symmetric-difference momentum, which
        // the time stencil amplifies by 1/dt
        CHECK(euler_lagrange_residual(L, path, dt) < 1e-7);
    }
    SUBCASE("negative control: wrong frequency") {
        std::vector<double> path;
        for (int i = 0; i <= 3000; ++i) path.push_back(std::cos(1.3 * i * dt));
        auto L = [](double x, double v) { return 0.5 * v * v - 0.5 * x * x; };
        CHECK(euler_lagrange_residual(L, path, dt) > 0.1);
    }
    SUBCASE("deformed isotonic path with the constraint satisfied") {
        // R1 = 0 solved for alpha^2 at (lambda, k, w, A) = (0.5, 0.2, 1, 1)
        const double w = 1.0, A = 1.0;
        const ModelParams1D p{0.5, std::sqrt(1.8), 0.2};
        REQUIRE(classical::deformed_isotonic_residual(p, w, A) ==
                Approx(0.0).epsilon(1e-14));
        std::vector<double> path;
        for (int i = 0; i <= 3000; ++i)
            path.push_back(classical::deformed_isotonic_solution(p, w, A, 0.4, i * dt));
        auto L = [&](double x, double v) { return classical::lagrangian_1d(p, x, v); };
        CHECK(euler_lagrange_residual(L, path, dt) < 1e-7);
    }
}
