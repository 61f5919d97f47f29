#include "losc/classical.hpp"

#include <cmath>
#include <complex>

#include "losc/ktrig.hpp"

namespace losc::classical {

double metric_factor(double lambda, double r2, const char* where) {
    const double m = 1.0 + lambda * r2;
    if (m <= 0.0)
        throw DomainError(std::string(where) + ": 1 + lambda r^2 <= 0");
    return m;
}

// ---------------------------------------------------------------------------
// 1D

double ml_acceleration(const ModelParams1D& p, double x, double v) {
    const double m = metric_factor(p.lambda, x * x, "ml_acceleration");
    return (p.lambda * x * v * v - p.alpha * p.alpha * x) / m;
}

double acceleration_1d(const ModelParams1D& p, double x, double v) {
    const double m = metric_factor(p.lambda, x * x, "acceleration_1d");
    double a = (p.lambda * x * v * v - p.alpha * p.alpha * x) / m;
    if (p.k != 0.0) {
        if (x == 0.0)
            throw SingularityError("acceleration_1d: barrier force at x = 0");
        a += 2.0 * p.k * m / (x * x * x);
    }
    return a;
}

double ml_frequency(const ModelParams1D& p, double A) {
    const double m = metric_factor(p.lambda, A * A, "ml_frequency");
    return p.alpha / std::sqrt(m);
}

Point1D ml_exact_solution(const ModelParams1D& p, double A, double phi, double t) {
    const double w = ml_frequency(p, A);
    return {A * std::sin(w * t + phi), A * w * std::cos(w * t + phi)};
}

double isotonic_exact_solution(const ModelParams1D& p, double A, double phi, double t) {
    if (p.k <= 0.0 || A <= 0.0)
        throw DomainError("isotonic_exact_solution: requires k > 0 and A > 0");
    const double a = p.alpha;
    const double c = -2.0 * p.k;
    const double s = std::sin(a * t + phi);
    const double rad = (a * a * A * A * A * A + c) * s * s - c;
    if (rad <= 0.0)
        throw DomainError("isotonic_exact_solution: non-positive radicand");
    return std::sqrt(rad) / (a * A);
}

double deformed_isotonic_residual(const ModelParams1D& p, double omega, double A) {
    const double A2 = A * A;
    return p.lambda * omega * omega * A2 * A2 -
           (p.alpha * p.alpha - omega * omega - 2.0 * p.k * p.lambda * p.lambda) * A2 +
           2.0 * p.k * p.lambda;
}

double deformed_isotonic_solution(const ModelParams1D& p, double omega, double A,
                                  double phi, double t) {
    if (A <= 0.0 || omega <= 0.0)
        throw DomainError("deformed_isotonic_solution: requires A > 0 and omega > 0");
    const double s = std::sin(omega * t + phi);
    const double rad = (omega * omega * A * A * A * A - 2.0 * p.k) * s * s + 2.0 * p.k;
    if (rad <= 0.0)
        throw DomainError("deformed_isotonic_solution: non-positive radicand");
    return std::sqrt(rad) / (omega * A);
}

double deformed_isotonic_unbounded(const ModelParams1D& p, double Omega, double A,
                                   double phi, double t) {
    if (A <= 0.0 || Omega <= 0.0)
        throw DomainError("deformed_isotonic_unbounded: requires A > 0 and Omega > 0");
    const double sh = std::sinh(Omega * t + phi);
    const double rad = (Omega * Omega * A * A * A * A - 2.0 * p.k) * sh * sh + 2.0 * p.k;
    if (rad <= 0.0)
        throw DomainError("deformed_isotonic_unbounded: non-positive radicand");
    return std::sqrt(rad) / (Omega * A);
}

double deformed_isotonic_limit_unbounded(double A, double B, double C, double t) {
    const double u = A * t + B;
    const double rad = u * u + C;
    if (rad <= 0.0)
        throw DomainError("deformed_isotonic_limit_unbounded: non-positive radicand");
    return std::sqrt(rad);
}

double lagrangian_1d(const ModelParams1D& p, double x, double v) {
    const double m = metric_factor(p.lambda, x * x, "lagrangian_1d");
    double L = 0.5 * (v * v - p.alpha * p.alpha * x * x) / m;
    if (p.k != 0.0) {
        if (x == 0.0) throw SingularityError("lagrangian_1d: barrier at x = 0");
        L -= p.k / (x * x);
    }
    return L;
}

double hamiltonian_1d(const ModelParams1D& p, double x, double px) {
    const double m = metric_factor(p.lambda, x * x, "hamiltonian_1d");
    double H = 0.5 * m * px * px + 0.5 * p.alpha * p.alpha * x * x / m;
    if (p.k > 0.0) {
        if (x == 0.0) throw SingularityError("hamiltonian_1d: barrier at x = 0");
        H += p.k / (x * x);
    }
    return H;
}

// ---------------------------------------------------------------------------
// 2D kinematics

Momenta2D legendre_2d(const ModelParams2D& p, double x, double y, double vx, double vy) {
    const double m = metric_factor(p.lambda, x * x + y * y, "legendre_2d");
    const double l = p.lambda;
    return {((1.0 + l * y * y) * vx - l * x * y * vy) / m,
            ((1.0 + l * x * x) * vy - l * x * y * vx) / m};
}

Velocities2D legendre_2d_inverse(const ModelParams2D& p, double x, double y,
                                 double px, double py) {
    metric_factor(p.lambda, x * x + y * y, "legendre_2d_inverse");
    const double radial = x * px + y * py;
    return {px + p.lambda * x * radial, py + p.lambda * y * radial};
}

double potential_2d(const ModelParams2D& p, double x, double y) {
    const double r2 = x * x + y * y;
    const double m = metric_factor(p.lambda, r2, "potential_2d");
    double V = 0.5 * p.alpha * p.alpha * r2 / m;
    if (p.k2 != 0.0) {
        if (x == 0.0) throw SingularityError("potential_2d: k2 barrier at x = 0");
        V += p.k2 / (x * x);
    }
    if (p.k3 != 0.0) {
        if (y == 0.0) throw SingularityError("potential_2d: k3 barrier at y = 0");
        V += p.k3 / (y * y);
    }
    return V;
}

double lagrangian_2d(const ModelParams2D& p, double x, double y, double vx, double vy) {
    const double r2 = x * x + y * y;
    const double m = metric_factor(p.lambda, r2, "lagrangian_2d");
    const double J = x * vy - y * vx;
    const double T = 0.5 * (vx * vx + vy * vy + p.lambda * J * J) / m;
    return T - potential_2d(p, x, y);
}

double hamiltonian_2d(const ModelParams2D& p, double x, double y, double px, double py) {
    const double radial = x * px + y * py;
    const double T = 0.5 * (px * px + py * py + p.lambda * radial * radial);
    return T + potential_2d(p, x, y);
}

// ---------------------------------------------------------------------------
// First integrals

namespace {

// P_i(lambda) of the deformed 2D family (velocity picture).
struct DeformedMomenta {
    double P1;
    double P2;
    double J;
    double sq; // sqrt(1 + lambda r^2)
};

DeformedMomenta deformed_momenta(double lambda, const PhaseState& s) {
    const double x = s.q[0], y = s.q[1], vx = s.w[0], vy = s.w[1];
    const double m = metric_factor(lambda, x * x + y * y, "deformed_momenta");
    const double sq = std::sqrt(m);
    const double J = x * vy - y * vx;
    return {(vx - lambda * J * y) / sq, (vy + lambda * J * x) / sq, J, sq};
}

} // namespace

Integrals3 nonlinear2d_integrals(const ModelParams2D& p, const PhaseState& s) {
    s.require_kind(PhaseState::Kind::velocity, "nonlinear2d_integrals");
    const auto dm = deformed_momenta(p.lambda, s);
    const std::complex<double> K1(dm.P1, p.alpha * s.q[0] / dm.sq);
    const std::complex<double> K2(dm.P2, p.alpha * s.q[1] / dm.sq);
    return {std::norm(K1), std::norm(K2), std::imag(K1 * std::conj(K2))};
}

Integrals3 deformed_sw_integrals(const ModelParams2D& p, const PhaseState& s) {
    s.require_kind(PhaseState::Kind::velocity, "deformed_sw_integrals");
    const double x = s.q[0], y = s.q[1];
    const double m = metric_factor(p.lambda, x * x + y * y, "deformed_sw_integrals");
    if (p.k2 > 0.0 && x == 0.0)
        throw SingularityError("deformed_sw_integrals: x = 0 with k2 > 0");
    if (p.k3 > 0.0 && y == 0.0)
        throw SingularityError("deformed_sw_integrals: y = 0 with k3 > 0");
    const auto dm = deformed_momenta(p.lambda, s);
    const double a2 = p.alpha * p.alpha;
    double I1 = dm.P1 * dm.P1 + a2 * x * x / m;
    double I2 = dm.P2 * dm.P2 + a2 * y * y / m;
    double I3 = dm.J * dm.J;
    if (p.k2 != 0.0) {
        I1 += 2.0 * p.k2 * (1.0 + p.lambda * y * y) / (x * x);
        I3 += 2.0 * p.k2 * y * y / (x * x);
    }
    if (p.k3 != 0.0) {
        I2 += 2.0 * p.k3 * (1.0 + p.lambda * x * x) / (y * y);
        I3 += 2.0 * p.k3 * x * x / (y * y);
    }
    return {I1, I2, I3};
}

Integrals4 rational_oscillator_integrals(const ModelParams2D& p, const PhaseState& s) {
    s.require_kind(PhaseState::Kind::momentum, "rational_oscillator_integrals");
    const double x = s.q[0], y = s.q[1], px = s.w[0], py = s.w[1];
    const double w1 = p.n1 * p.omega0, w2 = p.n2 * p.omega0;
    const double Ex = 0.5 * (px * px + w1 * w1 * x * x);
    const double Ey = 0.5 * (py * py + w2 * w2 * y * y);
    const std::complex<double> Kx(px, w1 * x), Ky(py, w2 * y);
    std::complex<double> J(1.0, 0.0);
    for (int i = 0; i < p.n2; ++i) J *= Kx;
    for (int i = 0; i < p.n1; ++i) J *= std::conj(Ky);
    return {Ex, Ey, std::imag(J), std::real(J)};
}

double curved_sw_potential(double kappa, double rho, double phi, const CurvedSWParams& cp) {
    using ktrig::tan_k;
    const double t = tan_k(kappa, rho);
    double U = 0.5 * cp.omega0 * cp.omega0 * t * t;
    const double srho = ktrig::sin_k(kappa, rho);
    if (cp.k2 != 0.0) {
        const double c = std::cos(phi);
        if (c == 0.0) throw SingularityError("curved_sw_potential: cos(phi) = 0 with k2 != 0");
        U += cp.k2 / (srho * srho * c * c);
    }
    if (cp.k3 != 0.0) {
        const double si = std::sin(phi);
        if (si == 0.0) throw SingularityError("curved_sw_potential: sin(phi) = 0 with k3 != 0");
        U += cp.k3 / (srho * srho * si * si);
    }
    return U;
}

double curved_sw_lagrangian(double kappa, double rho, double phi, double v_rho,
                            double v_phi, const CurvedSWParams& cp) {
    const double srho = ktrig::sin_k(kappa, rho);
    return 0.5 * (v_rho * v_rho + srho * srho * v_phi * v_phi) -
           curved_sw_potential(kappa, rho, phi, cp);
}

Integrals3 curved_sw_integrals(double kappa, double rho, double phi, double v_rho,
                               double v_phi, const CurvedSWParams& cp) {
    using ktrig::cos_k;
    using ktrig::sin_k;
    using ktrig::tan_k;
    const double c = std::cos(phi), si = std::sin(phi);
    const double S = sin_k(kappa, rho), C = cos_k(kappa, rho);
    const double T = tan_k(kappa, rho); // throws PoleError at Cos_k = 0
    const double P1 = c * v_rho - C * S * si * v_phi;
    const double P2 = si * v_rho + C * S * c * v_phi;
    const double J = S * S * v_phi;
    const double w2 = cp.omega0 * cp.omega0;

    const double tc = T * c;
    const double ts = T * si;
    double I1 = P1 * P1 + w2 * tc * tc;
    double I2 = P2 * P2 + w2 * ts * ts;
    double I3 = J * J;
    if (cp.k2 != 0.0) {
        if (c == 0.0) throw SingularityError("curved_sw_integrals: cos(phi) = 0 with k2 != 0");
        I1 += 2.0 * cp.k2 / (tc * tc);
        I3 += 2.0 * cp.k2 / (c * c);
    }
    if (cp.k3 != 0.0) {
        if (si == 0.0) throw SingularityError("curved_sw_integrals: sin(phi) = 0 with k3 != 0");
        I2 += 2.0 * cp.k3 / (ts * ts);
        I3 += 2.0 * cp.k3 / (si * si);
    }
    return {I1, I2, I3};
}

} // namespace losc::classical
