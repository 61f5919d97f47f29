#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "losc/dynamics.hpp"
#include "losc/ktrig.hpp"
#include "losc/separability.hpp"

using namespace losc;
using namespace losc::separability;
using doctest::Approx;

TEST_CASE("chart forward: examples and round-trips") {
    CHECK(chart_forward({Chart::Tag::zx_y, 0.0}, 2.0, 5.0)[0] == Approx(2.0));
    CHECK(chart_forward({Chart::Tag::zx_y, 0.0}, 2.0, 5.0)[1] == Approx(5.0));
    const auto u = chart_forward({Chart::Tag::zx_y, 3.0}, 2.0, 1.0);
    CHECK(u[0] == Approx(1.0).epsilon(1e-14));
    CHECK(u[1] == Approx(1.0));
    CHECK_THROWS_AS(chart_forward({Chart::Tag::polar, 0.0}, 0.0, 0.0), OriginError);

    for (auto tag : {Chart::Tag::zx_y, Chart::Tag::x_zy, Chart::Tag::polar,
                     Chart::Tag::cartesian, Chart::Tag::geodesic_polar,
                     Chart::Tag::gnomonic})
        for (double lambda : {-0.4, 0.0, 0.7})
            for (double x : {0.25, -0.6, 1.0})
                for (double y : {0.2, -0.45}) {
                    const Chart c{tag, lambda};
                    const auto f = chart_forward(c, x, y);
                    const auto b = chart_inverse(c, f[0], f[1]);
                    CHECK(std::fabs(b[0] - x) < 1e-12);
                    CHECK(std::fabs(b[1] - y) < 1e-12);
                }
}

TEST_CASE("polar angle lands in (-pi, pi]") {
    const auto u = chart_forward({Chart::Tag::polar, 0.0}, -1.0, 0.0);
    CHECK(u[1] == Approx(M_PI));
    const auto v = chart_forward({Chart::Tag::polar, 0.0}, -1.0, -1e-9);
    CHECK(v[1] < 0.0);
}

TEST_CASE("oscillator potential agrees in all separable charts") {
    for (double lambda : {-0.4, 0.0, 0.7})
        for (double x : {0.3, -0.5})
            for (double y : {0.25, 0.6}) {
                const double r2 = x * x + y * y;
                const double m = 1.0 + lambda * r2;
                if (m <= 0.0) continue;
                const double alpha = 1.3;
                const double v_ref = 0.5 * alpha * alpha * r2 / m;
                for (auto tag : {Chart::Tag::zx_y, Chart::Tag::x_zy, Chart::Tag::polar}) {
                    const Chart c{tag, lambda};
                    const auto sp = oscillator_separable(c);
                    CHECK(separable_potential_value(sp, alpha, x, y) ==
                          Approx(v_ref).epsilon(1e-12));
                }
            }
}

TEST_CASE("chart integrals: flat split and H = (I1 + I2)/2") {
    SUBCASE("cartesian harmonic split") {
        const Chart c{Chart::Tag::cartesian, 0.0};
        const SeparablePotential sp{c, [](double z) { return z * z; },
                                    [](double z) { return z * z; }};
        const auto s =
            PhaseState::make2d(0.7, -0.4, 0.5, 1.1, PhaseState::Kind::momentum);
        const double alpha = 2.0;
        const auto [I1, I2] = chart_integrals(c, sp, s, alpha);
        CHECK(I1 == Approx(0.25 + 4.0 * 0.49));
        CHECK(I2 == Approx(1.21 + 4.0 * 0.16));
    }
    SUBCASE("deformed oscillator, every chart") {
        const double alpha = 1.0;
        for (double lambda : {-0.3, 0.4})
            for (auto tag : {Chart::Tag::zx_y, Chart::Tag::x_zy, Chart::Tag::polar}) {
                const Chart c{tag, lambda};
                const auto sp = oscillator_separable(c);
                const auto s = PhaseState::make2d(0.5, 0.3, -0.2, 0.8,
                                                  PhaseState::Kind::momentum);
                ModelParams2D mp;
                mp.lambda = lambda;
                mp.alpha = alpha;
                const double H =
                    classical::hamiltonian_2d(mp, s.q[0], s.q[1], s.w[0], s.w[1]);
                const auto [I1, I2] = chart_integrals(c, sp, s, alpha);
                CHECK(0.5 * (I1 + I2) == Approx(H).epsilon(1e-12));
            }
    }
}

TEST_CASE("chart integrals are conserved along the flow") {
    ModelParams2D mp;
    mp.lambda = 0.4;
    mp.alpha = 1.0;
    auto model = dynamics::make_model_2d_hamiltonian(mp);
    const auto s0 = dynamics::to_momentum_kind(
        mp, PhaseState::make2d(0.6, 0.1, 0.2, 0.7, PhaseState::Kind::velocity));
    dynamics::IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 40.0;
    const auto traj = dynamics::integrate(model, s0, cfg);
    for (auto tag : {Chart::Tag::zx_y, Chart::Tag::x_zy, Chart::Tag::polar}) {
        const Chart c{tag, mp.lambda};
        const auto sp = oscillator_separable(c);
        for (int which : {0, 1}) {
            classical::ConservedQuantity q{
                "I", [&, which](const PhaseState& st) {
                    const auto p = chart_integrals(c, sp, st, mp.alpha);
                    return which == 0 ? p.first : p.second;
                }};
            CHECK(dynamics::conservation_drift(traj, q) < 1e-9);
        }
    }
}

TEST_CASE("oscillator decomposition identity and worked point") {
    SUBCASE("flat decoupling") {
        const auto s =
            PhaseState::make2d(0.4, 0.6, 0.3, -0.8, PhaseState::Kind::momentum);
        const auto d = decompose_oscillator(0.0, 1.0, s);
        ModelParams2D mp;
        CHECK(d.H1 + d.H2 ==
              Approx(classical::hamiltonian_2d(mp, 0.4, 0.6, 0.3, -0.8)));
    }
    SUBCASE("lambda = 1 worked point") {
        const double alpha = 1.7;
        const auto s = PhaseState::make2d(1.0, 0.0, 0.0, 1.0, PhaseState::Kind::momentum);
        const auto d = decompose_oscillator(1.0, alpha, s);
        CHECK(d.H3 == Approx(0.5));
        CHECK(d.H1 == Approx(0.25 * alpha * alpha));
        CHECK(d.H2 == Approx(1.0));
        ModelParams2D mp;
        mp.lambda = 1.0;
        mp.alpha = alpha;
        CHECK(d.H1 + d.H2 - 1.0 * d.H3 ==
              Approx(classical::hamiltonian_2d(mp, 1.0, 0.0, 0.0, 1.0)).epsilon(1e-12));
    }
    SUBCASE("components conserved along flow") {
        ModelParams2D mp;
        mp.lambda = 0.4;
        mp.alpha = 1.0;
        auto model = dynamics::make_model_2d_hamiltonian(mp);
        const auto s0 = dynamics::to_momentum_kind(
            mp, PhaseState::make2d(0.5, -0.3, 0.4, 0.6, PhaseState::Kind::velocity));
        dynamics::IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 40.0;
        const auto traj = dynamics::integrate(model, s0, cfg);
        for (int which : {0, 1, 2}) {
            classical::ConservedQuantity q{"H_i", [&, which](const PhaseState& st) {
                const auto d = decompose_oscillator(mp.lambda, mp.alpha, st);
                return which == 0 ? d.H1 : which == 1 ? d.H2 : d.H3;
            }};
            CHECK(dynamics::conservation_drift(traj, q) < 1e-9);
        }
    }
}

TEST_CASE("S-W decomposition") {
    SUBCASE("reduces to the oscillator decomposition without barriers") {
        const auto s = PhaseState::make2d(0.5, 0.7, 0.2, -0.4, PhaseState::Kind::momentum);
        const auto a = decompose_sw(0.3, 1.0, 0.0, 0.0, s);
        const auto b = decompose_oscillator(0.3, 1.0, s);
        CHECK(a.Hpx == Approx(b.H1));
        CHECK(a.Hpy == Approx(b.H2));
        CHECK(a.HJ == Approx(b.H3));
    }
    SUBCASE("sum identity with barriers") {
        for (double lambda : {-0.2, 0.0, 0.5}) {
            ModelParams2D mp;
            mp.lambda = lambda;
            mp.alpha = 1.1;
            mp.k2 = 0.1;
            mp.k3 = 0.2;
            const auto s =
                PhaseState::make2d(0.4, 0.7, 0.3, -0.5, PhaseState::Kind::momentum);
            const auto d = decompose_sw(lambda, mp.alpha, mp.k2, mp.k3, s);
            const double H =
                classical::hamiltonian_2d(mp, s.q[0], s.q[1], s.w[0], s.w[1]);
            CHECK(d.Hpx + d.Hpy - lambda * d.HJ == Approx(H).epsilon(1e-12));
        }
    }
    SUBCASE("three-way conservation, lambda = -0.2") {
        ModelParams2D mp;
        mp.lambda = -0.2;
        mp.alpha = 1.0;
        mp.k2 = 0.1;
        mp.k3 = 0.2;
        auto model = dynamics::make_model_2d_hamiltonian(mp);
        const auto s0 = dynamics::to_momentum_kind(
            mp, PhaseState::make2d(0.6, 0.8, 0.3, -0.2, PhaseState::Kind::velocity));
        dynamics::IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 40.0;
        const auto traj = dynamics::integrate(model, s0, cfg);
        for (int which : {0, 1, 2}) {
            classical::ConservedQuantity q{"H_i", [&, which](const PhaseState& st) {
                const auto d = decompose_sw(mp.lambda, mp.alpha, mp.k2, mp.k3, st);
                return which == 0 ? d.Hpx : which == 1 ? d.Hpy : d.HJ;
            }};
            CHECK(dynamics::conservation_drift(traj, q) < 1e-8);
        }
    }
    SUBCASE("axis contact raises") {
        const auto s = PhaseState::make2d(0.0, 1.0, 0.1, 0.1, PhaseState::Kind::momentum);
        CHECK_THROWS_AS(decompose_sw(0.1, 1.0, 0.5, 0.0, s), SingularityError);
    }
}

TEST_CASE("S-W potential written three ways") {
    SUBCASE("flat") {
        const auto f = sw_potential_three_forms(0.0, 1.0, 0.1, 0.2, 0.4, 0.7);
        ModelParams2D mp;
        mp.alpha = 1.0;
        mp.k2 = 0.1;
        mp.k3 = 0.2;
        const double V = classical::potential_2d(mp, 0.4, 0.7);
        CHECK(f.v_zx == Approx(V).epsilon(1e-12));
        CHECK(f.v_zy == Approx(V).epsilon(1e-12));
        CHECK(f.v_polar == Approx(V).epsilon(1e-12));
    }
    SUBCASE("deformed worked point") {
        const auto f = sw_potential_three_forms(0.5, 1.0, 0.1, 0.1, 0.3, 0.4);
        CHECK(f.v_zx == Approx(f.v_zy).epsilon(1e-12));
        CHECK(f.v_zx == Approx(f.v_polar).epsilon(1e-12));
        ModelParams2D mp;
        mp.lambda = 0.5;
        mp.alpha = 1.0;
        mp.k2 = 0.1;
        mp.k3 = 0.1;
        CHECK(f.v_polar == Approx(classical::potential_2d(mp, 0.3, 0.4)).epsilon(1e-12));
    }
    SUBCASE("axis with barrier raises from all forms") {
        CHECK_THROWS_AS(sw_potential_three_forms(0.1, 1.0, 0.5, 0.0, 0.0, 1.0),
                        SingularityError);
    }
}

TEST_CASE("gnomonic (Beltrami) Lagrangian") {
    SUBCASE("flat limit") {
        CHECK(higgs_lagrangian(0.0, 0.4, 0.7, 1.0, -0.5, 1.3) ==
              Approx(0.5 * (1.0 + 0.25) -
                     0.5 * 1.3 * 1.3 * (0.16 + 0.49)));
    }
    SUBCASE("matches the geodesic-polar Lagrangian at matched data") {
        for (double kappa : {1.0, -1.0}) {
            const double rho = 0.5, phi = 0.8, vr = 0.3, vp = -0.6, alpha = 1.2;
            classical::CurvedSWParams cp{alpha, 0.0, 0.0};
            const double Lk = classical::curved_sw_lagrangian(kappa, rho, phi, vr, vp, cp);
            // gnomonic image: r' = Tan_k(rho); v' by the chain rule
            const double T = ktrig::tan_k(kappa, rho);
            const double C = ktrig::cos_k(kappa, rho);
            const double dT = 1.0 / (C * C);
            const double xg = T * std::cos(phi), yg = T * std::sin(phi);
            const double vxg = dT * vr * std::cos(phi) - T * std::sin(phi) * vp;
            const double vyg = dT * vr * std::sin(phi) + T * std::cos(phi) * vp;
            CHECK(higgs_lagrangian(kappa, xg, yg, vxg, vyg, alpha) ==
                  Approx(Lk).epsilon(1e-10));
        }
    }
    SUBCASE("defined through 1 - r'^2 sign changes for kappa < 0") {
        CHECK_NOTHROW(higgs_lagrangian(-1.0, 3.0, 0.0, 0.2, 0.1, 1.0));
        CHECK_THROWS_AS(higgs_lagrangian(-1.0, 1.0, 0.0, 0.2, 0.1, 1.0), DomainError);
    }
}

TEST_CASE("geodesic radial map matches the Cartesian deformed Lagrangian") {
    // r = Sin_k(rho), k = -lambda: L_kappa equals the deformed oscillator
    // Lagrangian at matched Cartesian data.
    const double kappa = 0.7, lambda = -0.7;
    const double rho = 0.6, phi = 0.4, vr = 0.25, vp = -0.5, alpha = 1.1;
    classical::CurvedSWParams cp{alpha, 0.0, 0.0};
    const double Lk = classical::curved_sw_lagrangian(kappa, rho, phi, vr, vp, cp);
    const double S = ktrig::sin_k(kappa, rho), C = ktrig::cos_k(kappa, rho);
    const double x = S * std::cos(phi), y = S * std::sin(phi);
    const double vx = C * vr * std::cos(phi) - S * std::sin(phi) * vp;
    const double vy = C * vr * std::sin(phi) + S * std::cos(phi) * vp;
    ModelParams2D mp;
    mp.lambda = lambda;
    mp.alpha = alpha;
    CHECK(classical::lagrangian_2d(mp, x, y, vx, vy) == Approx(Lk).epsilon(1e-10));
}
