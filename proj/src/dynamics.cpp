#include "losc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "losc/ktrig.hpp"

namespace losc::dynamics {

namespace {

// Abort when 1 + lambda r^2 drops below this.  The metric factor enters the
// equations of motion in denominators, so states this close to the lambda < 0
// circle are numerically untrustworthy long before they are singular.
constexpr double kGuardBand = 3e-3;

PhaseState unpack(const OdeModel& model, double t, const StateVec& y) {
    PhaseState s;
    s.dim = model.dim;
    s.kind = model.kind;
    s.t = t;
    if (model.dim == 1) {
        s.q = {y[0], 0.0};
        s.w = {y[1], 0.0};
    } else {
        s.q = {y[0], y[1]};
        s.w = {y[2], y[3]};
    }
    return s;
}

StateVec pack(const PhaseState& s) {
    if (s.dim == 1) return {s.q[0], s.w[0], 0.0, 0.0};
    return {s.q[0], s.q[1], s.w[0], s.w[1]};
}

StateVec axpy(const StateVec& y, double h, const StateVec& d) {
    StateVec r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = y[i] + h * d[i];
    return r;
}

void rk4_step(const OdeModel& m, double t, double h, StateVec& y) {
    StateVec k1, k2, k3, k4;
    m.rhs(t, y, k1);
    m.rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1), k2);
    m.rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2), k3);
    m.rhs(t + h, axpy(y, h, k3), k4);
    for (std::size_t i = 0; i < 4; ++i)
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

// Cash-Karp embedded 5(4) pair; returns the local error estimate.
double rkck_step(const OdeModel& m, double t, double h, const StateVec& y,
                 StateVec& out) {
    static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static constexpr double b21 = 0.2;
    static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0,
                            b54 = 35.0 / 27.0;
    static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0,
                            b63 = 575.0 / 13824.0, b64 = 44275.0 / 110592.0,
                            b65 = 253.0 / 4096.0;
    static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0,
                            c4 = 125.0 / 594.0, c6 = 512.0 / 1771.0;
    static constexpr double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                            d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                            d6 = c6 - 0.25;

    StateVec k1, k2, k3, k4, k5, k6, tmp;
    m.rhs(t, y, k1);
    tmp = axpy(y, h * b21, k1);
    m.rhs(t + a2 * h, tmp, k2);
    for (std::size_t i = 0; i < 4; ++i) tmp[i] = y[i] + h * (b31 * k1[i] + b32 * k2[i]);
    m.rhs(t + a3 * h, tmp, k3);
    for (std::size_t i = 0; i < 4; ++i)
        tmp[i] = y[i] + h * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
    m.rhs(t + a4 * h, tmp, k4);
    for (std::size_t i = 0; i < 4; ++i)
        tmp[i] = y[i] + h * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
    m.rhs(t + a5 * h, tmp, k5);
    for (std::size_t i = 0; i < 4; ++i)
        tmp[i] = y[i] + h * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] +
                             b65 * k5[i]);
    m.rhs(t + a6 * h, tmp, k6);

    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
        const double e =
            h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i]);
        err = std::max(err, std::fabs(e));
    }
    return err;
}

} // namespace

Trajectory integrate(const OdeModel& model, const PhaseState& s0,
                     const IntegratorConfig& cfg) {
    if (s0.kind != model.kind)
        throw DomainError("integrate: initial state kind does not match the model");
    StateVec y = pack(s0);
    if (model.domain_ok && !model.domain_ok(y))
        throw DomainExitError("integrate: initial state outside the admissible domain");

    Trajectory traj;
    traj.model_name = model.name;
    double t = 0.0;
    traj.times.push_back(t);
    traj.states.push_back(unpack(model, t, y));

    if (cfg.method == IntegratorConfig::Method::rk4) {
        if (cfg.dt <= 0.0) throw ConfigError("integrate: dt must be positive");
        const std::int64_t n = static_cast<std::int64_t>(std::ceil(cfg.t_end / cfg.dt - 1e-12));
        if (n > cfg.max_steps)
            throw MaxStepsExceeded("integrate: fixed-step plan exceeds max_steps");
        for (std::int64_t i = 0; i < n; ++i) {
            const double h = std::min(cfg.dt, cfg.t_end - t);
            rk4_step(model, t, h, y);
            t += h;
            if (model.domain_ok && !model.domain_ok(y))
                throw DomainExitError("integrate: domain guard tripped at t = " +
                                      std::to_string(t));
            traj.times.push_back(t);
            traj.states.push_back(unpack(model, t, y));
            ++traj.steps;
        }
        return traj;
    }

    // Adaptive rk45 with standard step-size controller.
    if (cfg.tol <= 0.0) throw ConfigError("integrate: tol must be positive");
    double h = std::min(1e-3, cfg.t_end);
    while (t < cfg.t_end) {
        if (traj.steps + traj.rejected_steps >= cfg.max_steps)
            throw MaxStepsExceeded("integrate: max_steps exceeded");
        h = std::min(h, cfg.t_end - t);
        StateVec ynew;
        const double err = rkck_step(model, t, h, y, ynew);
        if (err <= cfg.tol) {
            t += h;
            y = ynew;
            if (model.domain_ok && !model.domain_ok(y))
                throw DomainExitError("integrate: domain guard tripped at t = " +
                                      std::to_string(t));
            traj.times.push_back(t);
            traj.states.push_back(unpack(model, t, y));
            ++traj.steps;
            h *= std::min(5.0, 0.9 * std::pow(cfg.tol / std::max(err, 1e-300), 0.2));
        } else {
            ++traj.rejected_steps;
            h *= std::max(0.1, 0.9 * std::pow(cfg.tol / err, 0.25));
        }
    }
    return traj;
}

double measure_period(const Trajectory& traj, std::size_t coordinate_index) {
    std::vector<double> crossings;
    for (std::size_t i = 1; i < traj.states.size(); ++i) {
        const double w0 = traj.states[i - 1].w[coordinate_index];
        const double w1 = traj.states[i].w[coordinate_index];
        if (w0 == 0.0) {
            crossings.push_back(traj.times[i - 1]);
        } else if ((w0 < 0.0) != (w1 < 0.0)) {
            const double f = w0 / (w0 - w1);
            crossings.push_back(traj.times[i - 1] +
                                f * (traj.times[i] - traj.times[i - 1]));
        }
    }
    if (crossings.size() < 3)
        throw InsufficientCyclesError("measure_period: fewer than 3 zero crossings");
    // Successive crossings are half periods apart.
    return 2.0 * (crossings.back() - crossings.front()) /
           static_cast<double>(crossings.size() - 1);
}

double conservation_drift_serial(const Trajectory& traj,
                                 const classical::ConservedQuantity& q) {
    if (traj.states.empty())
        throw DomainError("conservation_drift: empty trajectory");
    const double q0 = q.eval(traj.states.front());
    const double scale = std::max(std::fabs(q0), 1.0);
    double drift = 0.0;
    for (const auto& s : traj.states)
        drift = std::max(drift, std::fabs(q.eval(s) - q0));
    return drift / scale;
}

double conservation_drift(const Trajectory& traj,
                          const classical::ConservedQuantity& q) {
    if (traj.states.empty())
        throw DomainError("conservation_drift: empty trajectory");
    const double q0 = q.eval(traj.states.front());
    const double scale = std::max(std::fabs(q0), 1.0);
    const std::int64_t n = static_cast<std::int64_t>(traj.states.size());
    double drift = 0.0;
#pragma omp parallel for reduction(max : drift) schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        drift = std::max(drift, std::fabs(q.eval(traj.states[i]) - q0));
    return drift / scale;
}

void export_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("export_csv: cannot open " + path);
    const std::size_t d = traj.states.empty() ? 1 : traj.states.front().dim;
    out << "t";
    for (std::size_t i = 1; i <= d; ++i) out << ",q" << i;
    for (std::size_t i = 1; i <= d; ++i) out << ",v" << i;
    out << "\n";
    char buf[32];
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const auto& s = traj.states[i];
        std::snprintf(buf, sizeof buf, "%.17g", traj.times[i]);
        out << buf;
        for (std::size_t j = 0; j < d; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", s.q[j]);
            out << ',' << buf;
        }
        for (std::size_t j = 0; j < d; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", s.w[j]);
            out << ',' << buf;
        }
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// Model factories

OdeModel make_model_1d(const ModelParams1D& p) {
    OdeModel m;
    m.name = p.k != 0.0 ? "deformed_isotonic_1d" : "ml1d";
    m.dim = 1;
    m.kind = PhaseState::Kind::velocity;
    m.rhs = [p](double, const StateVec& y, StateVec& dy) {
        dy[0] = y[1];
        dy[1] = classical::acceleration_1d(p, y[0], y[1]);
        dy[2] = dy[3] = 0.0;
    };
    if (p.lambda < 0.0) {
        const double l = p.lambda;
        m.domain_ok = [l](const StateVec& y) {
            return 1.0 + l * y[0] * y[0] >= kGuardBand;
        };
    }
    return m;
}

namespace {

std::function<bool(const StateVec&)> guard_2d(double lambda) {
    if (lambda >= 0.0) return nullptr;
    return [lambda](const StateVec& y) {
        return 1.0 + lambda * (y[0] * y[0] + y[1] * y[1]) >= kGuardBand;
    };
}

// Gradient of the 2D potential (deformed oscillator + barriers).
void potential_gradient_2d(const ModelParams2D& p, double x, double y, double& gx,
                           double& gy) {
    const double m = 1.0 + p.lambda * (x * x + y * y);
    const double a2 = p.alpha * p.alpha;
    gx = a2 * x / (m * m);
    gy = a2 * y / (m * m);
    if (p.k2 != 0.0) gx -= 2.0 * p.k2 / (x * x * x);
    if (p.k3 != 0.0) gy -= 2.0 * p.k3 / (y * y * y);
}

} // namespace

OdeModel make_model_2d_hamiltonian(const ModelParams2D& p) {
    OdeModel m;
    m.name = (p.k2 != 0.0 || p.k3 != 0.0) ? "deformed_sw_2d" : "nonlinear_osc_2d";
    m.dim = 2;
    m.kind = PhaseState::Kind::momentum;
    m.rhs = [p](double, const StateVec& y, StateVec& dy) {
        const double x = y[0], yy = y[1], px = y[2], py = y[3];
        const double radial = x * px + yy * py;
        dy[0] = px + p.lambda * x * radial;
        dy[1] = py + p.lambda * yy * radial;
        double gx, gy;
        potential_gradient_2d(p, x, yy, gx, gy);
        dy[2] = -p.lambda * radial * px - gx;
        dy[3] = -p.lambda * radial * py - gy;
    };
    m.domain_ok = guard_2d(p.lambda);
    return m;
}

OdeModel make_model_2d_lagrangian(const ModelParams2D& p) {
    OdeModel m;
    m.name = "nonlinear_osc_2d_lagrangian";
    m.dim = 2;
    m.kind = PhaseState::Kind::velocity;
    m.rhs = [p](double, const StateVec& y, StateVec& dy) {
        const double x = y[0], yy = y[1], vx = y[2], vy = y[3];
        const double l = p.lambda;
        const double D = 1.0 + l * (x * x + yy * yy);
        const double D2 = D * D;

        // metric g and its coordinate derivatives
        const double g11 = (1.0 + l * yy * yy) / D;
        const double g12 = -l * x * yy / D;
        const double g22 = (1.0 + l * x * x) / D;
        const double g11x = -2.0 * l * x * (1.0 + l * yy * yy) / D2;
        const double g11y = 2.0 * l * l * x * x * yy / D2;
        const double g22y = -2.0 * l * yy * (1.0 + l * x * x) / D2;
        const double g22x = 2.0 * l * l * x * yy * yy / D2;
        const double g12x = -l * yy * (1.0 + l * yy * yy - l * x * x) / D2;
        const double g12y = -l * x * (1.0 + l * x * x - l * yy * yy) / D2;

        double gx, gy;
        potential_gradient_2d(p, x, yy, gx, gy);

        // d/dt (g v) = grad_q (v^T g v / 2) - grad V
        const double quadx =
            0.5 * (g11x * vx * vx + 2.0 * g12x * vx * vy + g22x * vy * vy);
        const double quady =
            0.5 * (g11y * vx * vx + 2.0 * g12y * vx * vy + g22y * vy * vy);
        const double gdot_v1 =
            (g11x * vx + g11y * vy) * vx + (g12x * vx + g12y * vy) * vy;
        const double gdot_v2 =
            (g12x * vx + g12y * vy) * vx + (g22x * vx + g22y * vy) * vy;
        const double b1 = quadx - gx - gdot_v1;
        const double b2 = quady - gy - gdot_v2;

        const double det = g11 * g22 - g12 * g12;
        dy[0] = vx;
        dy[1] = vy;
        dy[2] = (g22 * b1 - g12 * b2) / det;
        dy[3] = (g11 * b2 - g12 * b1) / det;
    };
    m.domain_ok = guard_2d(p.lambda);
    return m;
}

OdeModel make_model_rational(const ModelParams2D& p) {
    OdeModel m;
    m.name = "rational_osc_2d";
    m.dim = 2;
    m.kind = PhaseState::Kind::momentum;
    const double w1 = p.n1 * p.omega0, w2 = p.n2 * p.omega0;
    m.rhs = [w1, w2](double, const StateVec& y, StateVec& dy) {
        dy[0] = y[2];
        dy[1] = y[3];
        dy[2] = -w1 * w1 * y[0];
        dy[3] = -w2 * w2 * y[1];
    };
    return m;
}

OdeModel make_model_curved_sw(double kappa, const classical::CurvedSWParams& cp) {
    OdeModel m;
    m.name = "curved_sw";
    m.dim = 2;
    m.kind = PhaseState::Kind::velocity;
    m.rhs = [kappa, cp](double, const StateVec& y, StateVec& dy) {
        const double rho = y[0], phi = y[1], vr = y[2], vp = y[3];
        const double S = ktrig::sin_k(kappa, rho);
        const double C = ktrig::cos_k(kappa, rho);
        const double T = ktrig::tan_k(kappa, rho);
        const double w2 = cp.omega0 * cp.omega0;
        // dU/drho and dU/dphi of the curved S-W potential
        double Ur = w2 * T / (C * C);
        double Up = 0.0;
        const double c = std::cos(phi), si = std::sin(phi);
        if (cp.k2 != 0.0) {
            Ur -= 2.0 * cp.k2 * C / (S * S * S * c * c);
            Up += 2.0 * cp.k2 * si / (S * S * c * c * c);
        }
        if (cp.k3 != 0.0) {
            Ur -= 2.0 * cp.k3 * C / (S * S * S * si * si);
            Up -= 2.0 * cp.k3 * c / (S * S * si * si * si);
        }
        dy[0] = vr;
        dy[1] = vp;
        dy[2] = S * C * vp * vp - Ur;
        dy[3] = (-Up - 2.0 * S * C * vr * vp) / (S * S);
    };
    return m;
}

PhaseState to_velocity_kind(const ModelParams2D& p, const PhaseState& s) {
    if (s.kind == PhaseState::Kind::velocity) return s;
    const auto v = classical::legendre_2d_inverse(p, s.q[0], s.q[1], s.w[0], s.w[1]);
    return PhaseState::make2d(s.q[0], s.q[1], v.vx, v.vy, PhaseState::Kind::velocity, s.t);
}

PhaseState to_momentum_kind(const ModelParams2D& p, const PhaseState& s) {
    if (s.kind == PhaseState::Kind::momentum) return s;
    const auto pm = classical::legendre_2d(p, s.q[0], s.q[1], s.w[0], s.w[1]);
    return PhaseState::make2d(s.q[0], s.q[1], pm.px, pm.py, PhaseState::Kind::momentum, s.t);
}

} // namespace losc::dynamics
