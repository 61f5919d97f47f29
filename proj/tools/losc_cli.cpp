// lambda-osc: command-line frontend for the deformed-oscillator library.
//
// Subcommands: simulate, invariants, chart, spectrum1d, spectrum2d,
// polynomials, verify.  A JSON config file may preload any flag; explicit
// flags win.  Exit codes: 0 success, 1 usage/config error, 2 runtime domain
// error.

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "losc/classical.hpp"
#include "losc/dynamics.hpp"
#include "losc/ktrig.hpp"
#include "losc/oracle.hpp"
#include "losc/quantum1d.hpp"
#include "losc/quantum2d.hpp"
#include "losc/separability.hpp"

using nlohmann::json;
using namespace losc;

namespace {

void apply_thread_cap() {
    if (const char* env = std::getenv("LAMBDA_OSC_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
}

// Preload CLI defaults from a JSON config so that explicit flags override.
void preload_config(CLI::App& app, int argc, char** argv) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json cfg;
    in >> cfg;
    // Values apply to every subcommand that has a matching option name; the
    // forced callback makes the default land in the bound variable unless an
    // explicit flag overrides it.
    for (auto& [key, value] : cfg.items()) {
        const std::string str =
            value.is_string() ? value.get<std::string>() : value.dump();
        for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
            if (auto* opt = sub->get_option_no_throw("--" + key))
                opt->default_val(str)->force_callback();
    }
}

struct Sim {
    std::string model = "ml1d";
    double lambda = 0.0, alpha = 1.0, k = 0.0, k2 = 0.0, k3 = 0.0;
    double omega0 = 1.0;
    int n1 = 1, n2 = 2;
    double kappa = 0.0;
    double x0 = 1.0, y0 = 0.0, v0 = 0.0, vy0 = 0.0;
    std::string method = "rk4";
    double dt = 1e-3, tol = 1e-10, t_end = 10.0;
    std::string out = "trajectory.csv";
    std::string summary;
};

dynamics::IntegratorConfig integrator_of(const Sim& s) {
    dynamics::IntegratorConfig cfg;
    if (s.method == "rk4")
        cfg.method = dynamics::IntegratorConfig::Method::rk4;
    else if (s.method == "rk45")
        cfg.method = dynamics::IntegratorConfig::Method::rk45_adaptive;
    else
        throw ConfigError("unknown integrator '" + s.method + "'");
    cfg.dt = s.dt;
    cfg.tol = s.tol;
    cfg.t_end = s.t_end;
    return cfg;
}

struct Prepared {
    dynamics::OdeModel model;
    PhaseState s0;
    std::vector<classical::ConservedQuantity> quantities;
};

Prepared prepare(const Sim& s) {
    Prepared p;
    if (s.model == "ml1d") {
        ModelParams1D mp{s.lambda, s.alpha, s.k};
        p.model = dynamics::make_model_1d(mp);
        p.s0 = PhaseState::make1d(s.x0, s.v0, PhaseState::Kind::velocity);
        p.quantities.push_back({"E", [mp](const PhaseState& st) {
            const double m = 1.0 + mp.lambda * st.q[0] * st.q[0];
            return classical::hamiltonian_1d(mp, st.q[0], st.w[0] / m);
        }});
        return p;
    }
    if (s.model == "osc2d" || s.model == "sw2d") {
        ModelParams2D mp;
        mp.lambda = s.lambda;
        mp.alpha = s.alpha;
        mp.k2 = (s.model == "sw2d") ? s.k2 : 0.0;
        mp.k3 = (s.model == "sw2d") ? s.k3 : 0.0;
        p.model = dynamics::make_model_2d_hamiltonian(mp);
        const auto sv = PhaseState::make2d(s.x0, s.y0, s.v0, s.vy0,
                                           PhaseState::Kind::velocity);
        p.s0 = dynamics::to_momentum_kind(mp, sv);
        const bool sw = (s.model == "sw2d");
        auto velocity_integrals = [mp, sw](const PhaseState& st) {
            const auto v = dynamics::to_velocity_kind(mp, st);
            return sw ? classical::deformed_sw_integrals(mp, v)
                      : classical::nonlinear2d_integrals(mp, v);
        };
        p.quantities.push_back({"I1", [velocity_integrals](const PhaseState& st) {
            return velocity_integrals(st).I1;
        }});
        p.quantities.push_back({"I2", [velocity_integrals](const PhaseState& st) {
            return velocity_integrals(st).I2;
        }});
        p.quantities.push_back({"I3", [velocity_integrals](const PhaseState& st) {
            return velocity_integrals(st).I3;
        }});
        p.quantities.push_back({"H", [mp](const PhaseState& st) {
            return classical::hamiltonian_2d(mp, st.q[0], st.q[1], st.w[0], st.w[1]);
        }});
        return p;
    }
    if (s.model == "rational") {
        ModelParams2D mp;
        mp.omega0 = s.omega0;
        mp.n1 = s.n1;
        mp.n2 = s.n2;
        p.model = dynamics::make_model_rational(mp);
        p.s0 = PhaseState::make2d(s.x0, s.y0, s.v0, s.vy0, PhaseState::Kind::momentum);
        const char* names[4] = {"Ex", "Ey", "ImJ", "ReJ"};
        for (int idx = 0; idx < 4; ++idx)
            p.quantities.push_back({names[idx], [mp, idx](const PhaseState& st) {
                const auto q = classical::rational_oscillator_integrals(mp, st);
                const double vals[4] = {q.I1, q.I2, q.I3, q.I4};
                return vals[idx];
            }});
        return p;
    }
    if (s.model == "curved_sw") {
        classical::CurvedSWParams cp{s.omega0, s.k2, s.k3};
        const double kappa = (s.kappa != 0.0) ? s.kappa : -s.lambda;
        p.model = dynamics::make_model_curved_sw(kappa, cp);
        p.s0 = PhaseState::make2d(s.x0, s.y0, s.v0, s.vy0, PhaseState::Kind::velocity);
        const char* names[3] = {"I1", "I2", "I3"};
        for (int idx = 0; idx < 3; ++idx)
            p.quantities.push_back({names[idx], [kappa, cp, idx](const PhaseState& st) {
                const auto q = classical::curved_sw_integrals(kappa, st.q[0], st.q[1],
                                                              st.w[0], st.w[1], cp);
                const double vals[3] = {q.I1, q.I2, q.I3};
                return vals[idx];
            }});
        return p;
    }
    throw ConfigError("unknown model '" + s.model + "'");
}

json drift_report(const Prepared& p, const dynamics::Trajectory& traj) {
    json drifts = json::object();
    for (const auto& q : p.quantities)
        drifts[q.name] = dynamics::conservation_drift(traj, q);
    return {{"model", p.model.name},
            {"steps", traj.steps},
            {"rejected_steps", traj.rejected_steps},
            {"t_end", traj.times.back()},
            {"drift", drifts}};
}

int cmd_simulate(const Sim& s) {
    const auto p = prepare(s);
    const auto traj = dynamics::integrate(p.model, p.s0, integrator_of(s));
    dynamics::export_csv(traj, s.out);
    const json report = drift_report(p, traj);
    if (!s.summary.empty()) {
        std::ofstream out(s.summary);
        out << report.dump(2) << "\n";
    }
    std::printf("%s\n", report.dump(2).c_str());
    return 0;
}

int cmd_invariants(const Sim& s, const std::string& out) {
    const auto p = prepare(s);
    const auto traj = dynamics::integrate(p.model, p.s0, integrator_of(s));
    std::FILE* f = out.empty() ? stdout : std::fopen(out.c_str(), "w");
    if (!f) throw ConfigError("cannot open " + out);
    std::fprintf(f, "name,initial,drift\n");
    for (const auto& q : p.quantities)
        std::fprintf(f, "%s,%.17g,%.17g\n", q.name.c_str(), q.eval(p.s0),
                     dynamics::conservation_drift(traj, q));
    if (f != stdout) std::fclose(f);
    return 0;
}

int cmd_chart(const std::string& name, double lambda, double x, double y,
              const std::string& out) {
    separability::Chart c{separability::chart_tag_from_name(name), lambda};
    const auto u = separability::chart_forward(c, x, y);
    const auto back = separability::chart_inverse(c, u[0], u[1]);
    std::FILE* f = out.empty() ? stdout : std::fopen(out.c_str(), "w");
    if (!f) throw ConfigError("cannot open " + out);
    std::fprintf(f, "x,y,u1,u2,x_back,y_back\n");
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, y, u[0], u[1],
                 back[0], back[1]);
    if (f != stdout) std::fclose(f);
    return 0;
}

int cmd_spectrum1d(double beta, double lambda, int levels, int points,
                   double tolerance, const std::string& out) {
    const auto qp = quantum1d::QuantumParams::from_beta(beta, lambda);
    const auto nmax = quantum1d::max_bound_index(beta, lambda);
    const int admissible =
        nmax ? static_cast<int>(std::min<long>(*nmax + 1, levels)) : levels;

    oracle::SturmLiouvilleOptions opt;
    opt.points = points;
    opt.tolerance = tolerance;
    // Ask the oracle for the requested depth even when some levels will be
    // flagged as continuum-contaminated.
    const auto orc = oracle::sturm_liouville_eigen(qp, levels, opt);

    std::FILE* f = out.empty() ? stdout : std::fopen(out.c_str(), "w");
    if (!f) throw ConfigError("cannot open " + out);
    std::fprintf(f, "n,series,ladder,oracle,two_grid_error,status\n");
    double worst = 0.0;
    for (int n = 0; n < levels; ++n) {
        const auto& e = orc.entries[n];
        if (n >= admissible) {
            std::fprintf(f, "%d,,,%.17g,%.17g,excluded\n", n, e.eigenvalue,
                         e.two_grid_error);
            continue;
        }
        const double series = qp.hbar * beta * quantum1d::energy_series(qp.Lambda(), n);
        const double ladder = quantum1d::energy_ladder(beta, lambda, n);
        const char* status = e.converged ? "converged" : "unconverged";
        std::fprintf(f, "%d,%.17g,%.17g,%.17g,%.17g,%s\n", n, series, ladder,
                     e.eigenvalue, e.two_grid_error, status);
        if (e.converged) worst = std::max(worst, std::fabs(series - e.eigenvalue));
    }
    if (f != stdout) std::fclose(f);
    std::fprintf(stderr, "max converged |series - oracle| = %.3e\n", worst);
    if (worst > tolerance)
        throw ConvergenceError("spectrum1d: closed forms and oracle disagree by " +
                               std::to_string(worst));
    return 0;
}

int cmd_spectrum2d(double Lambda, int maxN, const std::string& out) {
    std::FILE* f = out.empty() ? stdout : std::fopen(out.c_str(), "w");
    if (!f) throw ConfigError("cannot open " + out);
    std::fprintf(f, "m,n,N,energy,provenance\n");
    for (int N = 0; N <= maxN; ++N)
        for (int m = 0; m <= N; ++m) {
            const int n = N - m;
            try {
                const double e = quantum2d::energy_2d(Lambda, m, n);
                std::fprintf(f, "%d,%d,%d,%.17g,closed_form\n", m, n, N, e);
            } catch (const NotBoundStateError&) {
                std::fprintf(f, "%d,%d,%d,,excluded\n", m, n, N);
            }
        }
    if (f != stdout) std::fclose(f);
    return 0;
}

int cmd_polynomials(double Lambda, double G, int maxDegree, const std::string& out) {
    std::FILE* f = out.empty() ? stdout : std::fopen(out.c_str(), "w");
    if (!f) throw ConfigError("cannot open " + out);
    std::fprintf(f, "degree");
    for (int c = 0; c <= maxDegree; ++c) std::fprintf(f, ",c%d", c);
    std::fprintf(f, "\n");
    for (int n = 0; n <= maxDegree; ++n) {
        const auto q = quantum2d::deformed_hermite(Lambda, G, n);
        std::fprintf(f, "%d", n);
        for (int c = 0; c <= maxDegree; ++c)
            std::fprintf(f, ",%.17g", c <= n ? q.coefficients[c] : 0.0);
        std::fprintf(f, "\n");
    }
    if (f != stdout) std::fclose(f);
    return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyRow {
    std::string name;
    double measured;
    double tolerance;
    bool pass() const { return measured < tolerance; }
};

void verify_ktrig(std::vector<VerifyRow>& rows, double tol_scale) {
    double worst_id = 0.0, worst_cont = 0.0;
    for (double kappa : {-2.0, -0.5, 0.0, 0.5, 2.0})
        for (double x = -2.0; x <= 2.0; x += 0.25) {
            if (kappa > 0.0 && std::fabs(ktrig::cos_k(kappa, x)) < 1e-6) continue;
            const double c = ktrig::cos_k(kappa, x), s = ktrig::sin_k(kappa, x);
            worst_id = std::max(worst_id, std::fabs(c * c + kappa * s * s - 1.0));
            worst_id = std::max(
                worst_id, std::fabs(ktrig::sin_k(kappa, 2.0 * x) - 2.0 * s * c));
            // near kappa = 0 the implementation switches to a series branch;
            // it must agree with the closed trig/hyperbolic forms there
            const double eps = 1e-6, se = std::sqrt(eps);
            worst_cont = std::max(
                worst_cont, std::fabs(ktrig::sin_k(eps, x) - std::sin(se * x) / se));
            worst_cont = std::max(
                worst_cont, std::fabs(ktrig::sin_k(-eps, x) - std::sinh(se * x) / se));
        }
    rows.push_back({"ktrig identities", worst_id, 1e-12 * tol_scale});
    rows.push_back({"ktrig kappa->0 continuity", worst_cont, 1e-9 * tol_scale});
}

void verify_charts(std::vector<VerifyRow>& rows, double tol_scale) {
    double worst = 0.0;
    for (const char* name : {"zx_y", "x_zy", "polar", "cartesian", "gnomonic",
                             "geodesic_polar"})
        for (double lambda : {-0.4, 0.0, 0.7}) {
            separability::Chart c{separability::chart_tag_from_name(name), lambda};
            for (double x : {0.3, -0.6})
                for (double y : {0.2, 0.8}) {
                    const auto u = separability::chart_forward(c, x, y);
                    const auto b = separability::chart_inverse(c, u[0], u[1]);
                    worst = std::max(worst, std::hypot(b[0] - x, b[1] - y));
                }
        }
    rows.push_back({"chart round-trips", worst, 1e-12 * tol_scale});
}

void verify_decompositions(std::vector<VerifyRow>& rows, double tol_scale) {
    double worst = 0.0;
    for (double lambda : {-0.2, 0.0, 0.5}) {
        ModelParams2D mp;
        mp.lambda = lambda;
        mp.alpha = 1.3;
        mp.k2 = 0.1;
        mp.k3 = 0.2;
        const auto s = PhaseState::make2d(0.4, 0.7, 0.3, -0.5,
                                          PhaseState::Kind::momentum);
        const double H = classical::hamiltonian_2d(mp, s.q[0], s.q[1], s.w[0], s.w[1]);
        const auto d = separability::decompose_sw(lambda, mp.alpha, mp.k2, mp.k3, s);
        worst = std::max(worst, std::fabs(d.Hpx + d.Hpy - lambda * d.HJ - H));
        const auto forms = separability::sw_potential_three_forms(
            lambda, mp.alpha, mp.k2, mp.k3, s.q[0], s.q[1]);
        const double V = classical::potential_2d(mp, s.q[0], s.q[1]);
        worst = std::max({worst, std::fabs(forms.v_zx - V), std::fabs(forms.v_zy - V),
                          std::fabs(forms.v_polar - V)});
    }
    rows.push_back({"decomposition identities", worst, 1e-12 * tol_scale});
}

void verify_drift(std::vector<VerifyRow>& rows, double tol_scale) {
    Sim s;
    s.model = "sw2d";
    s.lambda = 0.5;
    s.k2 = 0.1;
    s.k3 = 0.2;
    s.x0 = 0.6;
    s.y0 = 0.8;
    s.v0 = 0.4;
    s.vy0 = -0.3;
    s.t_end = 30.0;
    const auto p = prepare(s);
    const auto traj = dynamics::integrate(p.model, p.s0, integrator_of(s));
    double worst = 0.0;
    for (const auto& q : p.quantities)
        worst = std::max(worst, dynamics::conservation_drift(traj, q));
    rows.push_back({"S-W invariant drift", worst, 1e-9 * tol_scale});
}

void verify_shape_invariance(std::vector<VerifyRow>& rows, double tol_scale,
                             unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(0.5, 1.5), width(0.8, 1.6);
    grid::GridSpec g{-8.0, 8.0, 1601};
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const double a = amp(rng), w = width(rng), b = amp(rng) - 1.0;
        auto psi = grid::GridFunction::sample(g, [&](double x) {
            return (a + b * x) * std::exp(-x * x / (2.0 * w * w));
        });
        worst = std::max(worst, quantum1d::shape_invariance_residual(1.0, 0.2, psi));
    }
    rows.push_back({"shape invariance residual", worst, 1e-7 * tol_scale});
}

void verify_flat_limit(std::vector<VerifyRow>& rows, double tol_scale) {
    // lambda = 0 regressions: harmonic spectrum and classical period.
    double worst = 0.0;
    for (int n = 0; n < 5; ++n)
        worst = std::max(worst,
                         std::fabs(quantum1d::energy_ladder(1.0, 0.0, n) - (n + 0.5)));
    const auto q3 = quantum2d::deformed_hermite(0.0, 1.0, 3);
    worst = std::max(worst, std::fabs(q3.coefficients[3] / q3.coefficients[1] + 2.0 / 3.0));
    rows.push_back({"flat-limit regressions", worst, 1e-12 * tol_scale});
}

int cmd_verify(const std::string& only, double tol_scale, unsigned seed) {
    std::vector<VerifyRow> rows;
    auto want = [&](const char* name) { return only.empty() || only == name; };
    if (want("ktrig")) verify_ktrig(rows, tol_scale);
    if (want("charts")) verify_charts(rows, tol_scale);
    if (want("decompositions")) verify_decompositions(rows, tol_scale);
    if (want("drift")) verify_drift(rows, tol_scale);
    if (want("shape_invariance")) verify_shape_invariance(rows, tol_scale, seed);
    if (want("flat_limit")) verify_flat_limit(rows, tol_scale);
    if (rows.empty()) throw ConfigError("verify: unknown suite '" + only + "'");
    bool all = true;
    for (const auto& r : rows) {
        std::printf("%-32s %-4s measured=%.3e tolerance=%.3e\n", r.name.c_str(),
                    r.pass() ? "PASS" : "FAIL", r.measured, r.tolerance);
        all = all && r.pass();
    }
    return all ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    apply_thread_cap();
    CLI::App app{"deformed nonlinear oscillator toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    Sim sim;
    std::string inv_out;
    auto add_sim_flags = [&](CLI::App* c) {
        c->add_option("--model", sim.model, "ml1d|osc2d|sw2d|rational|curved_sw");
        c->add_option("--lambda", sim.lambda);
        c->add_option("--alpha", sim.alpha);
        c->add_option("--k", sim.k);
        c->add_option("--k2", sim.k2);
        c->add_option("--k3", sim.k3);
        c->add_option("--omega0", sim.omega0);
        c->add_option("--n1", sim.n1);
        c->add_option("--n2", sim.n2);
        c->add_option("--kappa", sim.kappa);
        c->add_option("--x0", sim.x0);
        c->add_option("--y0", sim.y0);
        c->add_option("--v0", sim.v0);
        c->add_option("--vy0", sim.vy0);
        c->add_option("--method", sim.method, "rk4|rk45");
        c->add_option("--dt", sim.dt);
        c->add_option("--tol", sim.tol);
        c->add_option("--t-end", sim.t_end);
    };
    auto* c_sim = app.add_subcommand("simulate", "integrate a classical model");
    add_sim_flags(c_sim);
    c_sim->add_option("--out", sim.out, "trajectory CSV path");
    c_sim->add_option("--summary", sim.summary, "drift summary JSON path");

    auto* c_inv = app.add_subcommand("invariants", "first-integral drift table");
    add_sim_flags(c_inv);
    c_inv->add_option("--out", inv_out, "CSV path (default stdout)");

    std::string chart_name = "zx_y", chart_out;
    double chart_lambda = 0.0, chart_x = 0.5, chart_y = 0.5;
    auto* c_chart = app.add_subcommand("chart", "coordinate chart round-trip");
    c_chart->add_option("--chart", chart_name,
                        "zx_y|x_zy|polar|cartesian|geodesic_polar|gnomonic");
    c_chart->add_option("--lambda", chart_lambda);
    c_chart->add_option("--x", chart_x);
    c_chart->add_option("--y", chart_y);
    c_chart->add_option("--out", chart_out);

    double beta = 1.0, s1_lambda = 0.0, s1_tol = 1e-4;
    int levels = 5, points = 2000;
    std::string s1_out;
    auto* c_s1 = app.add_subcommand("spectrum1d",
                                    "series | ladder | oracle spectrum comparison");
    c_s1->add_option("--beta", beta);
    c_s1->add_option("--lambda", s1_lambda);
    c_s1->add_option("--levels", levels);
    c_s1->add_option("--points", points);
    c_s1->add_option("--tolerance", s1_tol);
    c_s1->add_option("--out", s1_out);

    double Lambda2 = 0.1;
    int maxN = 4;
    std::string s2_out;
    auto* c_s2 = app.add_subcommand("spectrum2d", "2D degenerate spectrum table");
    c_s2->add_option("--Lambda", Lambda2);
    c_s2->add_option("--max-N", maxN);
    c_s2->add_option("--out", s2_out);

    double pol_Lambda = 0.1, pol_G = 1.0;
    int pol_max = 6;
    std::string pol_out;
    auto* c_pol = app.add_subcommand("polynomials", "deformed Hermite coefficients");
    c_pol->add_option("--Lambda", pol_Lambda);
    c_pol->add_option("--G", pol_G);
    c_pol->add_option("--max-degree", pol_max);
    c_pol->add_option("--out", pol_out);

    std::string only;
    double tol_scale = 1.0;
    unsigned seed = 1234;
    auto* c_ver = app.add_subcommand("verify", "run the invariant suite");
    c_ver->add_option("--only", only,
                      "ktrig|charts|decompositions|drift|shape_invariance|flat_limit");
    c_ver->add_option("--tolerance", tol_scale, "tolerance scale factor");
    c_ver->add_option("--seed", seed);

    // accept --config after the subcommand name too; preload_config scans
    // argv directly, so the option only needs to parse
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->add_option("--config", config_path, "JSON config file (flags override)");

    try {
        preload_config(app, argc, argv);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::fprintf(stderr, "error code=%s message=%s\n", e.code().c_str(), e.what());
        return 1;
    }

    try {
        if (*c_sim) return cmd_simulate(sim);
        if (*c_inv) return cmd_invariants(sim, inv_out);
        if (*c_chart)
            return cmd_chart(chart_name, chart_lambda, chart_x, chart_y, chart_out);
        if (*c_s1) return cmd_spectrum1d(beta, s1_lambda, levels, points, s1_tol, s1_out);
        if (*c_s2) return cmd_spectrum2d(Lambda2, maxN, s2_out);
        if (*c_pol) return cmd_polynomials(pol_Lambda, pol_G, pol_max, pol_out);
        if (*c_ver) return cmd_verify(only, tol_scale, seed);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error code=%s message=%s\n", e.code().c_str(), e.what());
        return 1;
    } catch (const Error& e) {
        std::fprintf(stderr, "error code=%s message=%s\n", e.code().c_str(), e.what());
        return 2;
    }
    return 1;
}
