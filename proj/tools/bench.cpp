// Benchmark of the OpenMP-parallel kernels against their serial reference
// implementations.  Also verifies that both produce identical values.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "losc/dynamics.hpp"
#include "losc/quantum2d.hpp"

using namespace losc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F> double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, seconds(t0, Clock::now()));
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 513;
    if (const char* env = std::getenv("LAMBDA_OSC_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
    std::printf("threads: %d\n", omp_get_max_threads());

    // 2D Hamiltonian application
    quantum2d::Grid2DSpec g;
    g.nx = g.ny = n;
    auto psi = quantum2d::GridFunction2D::sample(g, [](double x, double y) {
        return (1.0 + 0.3 * x - 0.2 * x * y) * std::exp(-(x * x + y * y) / 3.0);
    });
    const double Lambda = 0.15;

    const double t_serial = time_best_of(3, [&] {
        auto out = quantum2d::apply_hamiltonian_2d_serial(Lambda, psi);
        volatile double sink = out.at(n / 2, n / 2);
        (void)sink;
    });
    const double t_parallel = time_best_of(3, [&] {
        auto out = quantum2d::apply_hamiltonian_2d(Lambda, psi);
        volatile double sink = out.at(n / 2, n / 2);
        (void)sink;
    });

    const auto a = quantum2d::apply_hamiltonian_2d_serial(Lambda, psi);
    const auto b = quantum2d::apply_hamiltonian_2d(Lambda, psi);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        diff = std::max(diff, std::fabs(a.values[i] - b.values[i]));
    std::printf("apply_hamiltonian_2d %dx%d: serial %.4f s, parallel %.4f s, "
                "speedup %.2fx, max |diff| %.3g\n",
                n, n, t_serial, t_parallel, t_serial / t_parallel, diff);

    // Conservation-drift scan over a long trajectory
    ModelParams2D mp;
    mp.lambda = 0.2;
    mp.alpha = 1.0;
    auto model = dynamics::make_model_2d_hamiltonian(mp);
    auto s0 = dynamics::to_momentum_kind(
        mp, PhaseState::make2d(0.7, 0.1, 0.0, 0.6, PhaseState::Kind::velocity));
    dynamics::IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 200.0;
    const auto traj = dynamics::integrate(model, s0, cfg);
    classical::ConservedQuantity H{"H", [mp](const PhaseState& s) {
        return classical::hamiltonian_2d(mp, s.q[0], s.q[1], s.w[0], s.w[1]);
    }};
    double d1 = 0.0, d2 = 0.0;
    const double t_ds = time_best_of(3, [&] { d1 = dynamics::conservation_drift_serial(traj, H); });
    const double t_dp = time_best_of(3, [&] { d2 = dynamics::conservation_drift(traj, H); });
    std::printf("conservation_drift (%zu samples): serial %.4f s, parallel %.4f s, "
                "speedup %.2fx, |d1 - d2| %.3g\n",
                traj.states.size(), t_ds, t_dp, t_ds / t_dp, std::fabs(d1 - d2));
    return diff == 0.0 ? 0 : 1;
}
