#include "losc/separability.hpp"

#include <cmath>
#include <string>

#include "losc/ktrig.hpp"

namespace losc::separability {

namespace {

double metric(double lambda, double r2, const char* where) {
    return classical::metric_factor(lambda, r2, where);
}

} // namespace

Chart::Tag chart_tag_from_name(const std::string& name) {
    if (name == "zx_y") return Chart::Tag::zx_y;
    if (name == "x_zy") return Chart::Tag::x_zy;
    if (name == "polar") return Chart::Tag::polar;
    if (name == "cartesian") return Chart::Tag::cartesian;
    if (name == "geodesic_polar") return Chart::Tag::geodesic_polar;
    if (name == "gnomonic") return Chart::Tag::gnomonic;
    throw ConfigError("unknown chart '" + name + "'");
}

const char* chart_name(Chart::Tag tag) {
    switch (tag) {
        case Chart::Tag::zx_y: return "zx_y";
        case Chart::Tag::x_zy: return "x_zy";
        case Chart::Tag::polar: return "polar";
        case Chart::Tag::cartesian: return "cartesian";
        case Chart::Tag::geodesic_polar: return "geodesic_polar";
        case Chart::Tag::gnomonic: return "gnomonic";
    }
    throw ConfigError("chart_name: bad tag");
}

std::array<double, 2> chart_forward(const Chart& c, double x, double y) {
    const double l = c.lambda;
    switch (c.tag) {
        case Chart::Tag::cartesian:
            return {x, y};
        case Chart::Tag::zx_y:
            return {x / std::sqrt(metric(l, y * y, "chart_forward(zx_y)")), y};
        case Chart::Tag::x_zy:
            return {x, y / std::sqrt(metric(l, x * x, "chart_forward(x_zy)"))};
        case Chart::Tag::polar: {
            if (x == 0.0 && y == 0.0)
                throw OriginError("chart_forward(polar): origin has no angle");
            return {std::hypot(x, y), std::atan2(y, x)};
        }
        case Chart::Tag::geodesic_polar: {
            if (x == 0.0 && y == 0.0)
                throw OriginError("chart_forward(geodesic_polar): origin has no angle");
            const double r = std::hypot(x, y);
            return {ktrig::to_geodesic(l, r), std::atan2(y, x)};
        }
        case Chart::Tag::gnomonic: {
            const double s =
                std::sqrt(metric(l, x * x + y * y, "chart_forward(gnomonic)"));
            return {x / s, y / s};
        }
    }
    throw ConfigError("chart_forward: bad tag");
}

std::array<double, 2> chart_inverse(const Chart& c, double u1, double u2) {
    const double l = c.lambda;
    switch (c.tag) {
        case Chart::Tag::cartesian:
            return {u1, u2};
        case Chart::Tag::zx_y:
            return {u1 * std::sqrt(metric(l, u2 * u2, "chart_inverse(zx_y)")), u2};
        case Chart::Tag::x_zy:
            return {u1, u2 * std::sqrt(metric(l, u1 * u1, "chart_inverse(x_zy)"))};
        case Chart::Tag::polar:
            return {u1 * std::cos(u2), u1 * std::sin(u2)};
        case Chart::Tag::geodesic_polar: {
            const double r = ktrig::from_geodesic(l, u1);
            return {r * std::cos(u2), r * std::sin(u2)};
        }
        case Chart::Tag::gnomonic: {
            // r^2 = r'^2 / (1 - lambda r'^2)
            const double rp2 = u1 * u1 + u2 * u2;
            const double den = metric(-l, rp2, "chart_inverse(gnomonic)");
            const double s = 1.0 / std::sqrt(den);
            return {u1 * s, u2 * s};
        }
    }
    throw ConfigError("chart_inverse: bad tag");
}

SeparablePotential oscillator_separable(const Chart& c) {
    const double l = c.lambda;
    auto shape = [l](double z) {
        return z * z / classical::metric_factor(l, z * z, "oscillator_separable");
    };
    switch (c.tag) {
        case Chart::Tag::zx_y:
        case Chart::Tag::x_zy:
            return {c, shape, shape};
        case Chart::Tag::polar:
            return {c, shape, [](double) { return 0.0; }};
        case Chart::Tag::cartesian:
            if (l != 0.0)
                throw ConfigError(
                    "oscillator_separable: cartesian chart separates only at lambda = 0");
            return {c, [](double z) { return z * z; }, [](double z) { return z * z; }};
        default:
            throw ConfigError("oscillator_separable: chart has no separable template");
    }
}

double separable_potential_value(const SeparablePotential& sp, double alpha,
                                 double x, double y) {
    const double l = sp.chart.lambda;
    const double a2h = 0.5 * alpha * alpha;
    const auto u = chart_forward(sp.chart, x, y);
    switch (sp.chart.tag) {
        case Chart::Tag::zx_y:
            return a2h * (sp.W1(u[0]) / metric(l, y * y, "separable_potential_value") +
                          sp.W2(u[1]));
        case Chart::Tag::x_zy:
            return a2h * (sp.W2(u[1]) / metric(l, x * x, "separable_potential_value") +
                          sp.W1(u[0]));
        case Chart::Tag::polar:
            return a2h * (sp.W1(u[0]) + sp.W2(u[1]) / (u[0] * u[0]));
        case Chart::Tag::cartesian:
            return a2h * (sp.W1(x) + sp.W2(y));
        default:
            throw ConfigError("separable_potential_value: chart has no template");
    }
}

std::pair<double, double> chart_integrals(const Chart& c, const SeparablePotential& sp,
                                          const PhaseState& s, double alpha) {
    s.require_kind(PhaseState::Kind::momentum, "chart_integrals");
    const double x = s.q[0], y = s.q[1], px = s.w[0], py = s.w[1];
    const double l = c.lambda;
    const double r2 = x * x + y * y;
    const double m = metric(l, r2, "chart_integrals");
    const double a2 = alpha * alpha;
    const double J = x * py - y * px;

    switch (c.tag) {
        case Chart::Tag::cartesian: {
            return {px * px + a2 * sp.W1(x), py * py + a2 * sp.W2(y)};
        }
        case Chart::Tag::zx_y: {
            const double my = metric(l, y * y, "chart_integrals(zx_y)");
            const double zx = x / std::sqrt(my);
            const double I1 = m * px * px + a2 * sp.W1(zx);
            const double I2 =
                m * py * py - l * J * J + a2 * (sp.W2(y) - l * y * y * sp.W1(zx) / my);
            return {I1, I2};
        }
        case Chart::Tag::x_zy: {
            const double mx = metric(l, x * x, "chart_integrals(x_zy)");
            const double zy = y / std::sqrt(mx);
            const double I1 = m * py * py + a2 * sp.W2(zy);
            const double I2 =
                m * px * px - l * J * J + a2 * (sp.W1(x) - l * x * x * sp.W2(zy) / mx);
            return {I1, I2};
        }
        case Chart::Tag::polar: {
            if (r2 == 0.0) throw OriginError("chart_integrals(polar): origin");
            const double r = std::sqrt(r2);
            const double phi = std::atan2(y, x);
            const double pr = (x * px + y * py) / r;
            const double I2 = J * J + a2 * sp.W2(phi); // p_phi = J
            const double I1 =
                m * pr * pr + a2 * sp.W1(r) + (1.0 - r2) / r2 * I2;
            return {I1, I2};
        }
        default:
            throw ConfigError("chart_integrals: chart has no separable template");
    }
}

OscillatorDecomposition decompose_oscillator(double lambda, double alpha,
                                             const PhaseState& s) {
    s.require_kind(PhaseState::Kind::momentum, "decompose_oscillator");
    const double x = s.q[0], y = s.q[1], px = s.w[0], py = s.w[1];
    const double r2 = x * x + y * y;
    const double m = metric(lambda, r2, "decompose_oscillator");
    const double a2 = alpha * alpha;
    const double J = x * py - y * px;
    OscillatorDecomposition d;
    d.H1 = 0.5 * (m * px * px + a2 * x * x / m);
    d.H2 = 0.5 * (m * py * py + a2 * y * y / m);
    d.H3 = 0.5 * J * J;
    return d;
}

SWDecomposition decompose_sw(double lambda, double alpha, double k2, double k3,
                             const PhaseState& s) {
    s.require_kind(PhaseState::Kind::momentum, "decompose_sw");
    const double x = s.q[0], y = s.q[1];
    if (k2 != 0.0 && x == 0.0)
        throw SingularityError("decompose_sw: x = 0 with k2 barrier");
    if (k3 != 0.0 && y == 0.0)
        throw SingularityError("decompose_sw: y = 0 with k3 barrier");
    const auto osc = decompose_oscillator(lambda, alpha, s);
    SWDecomposition d;
    d.Hpx = osc.H1;
    d.Hpy = osc.H2;
    d.HJ = osc.H3;
    if (k2 != 0.0) {
        d.Hpx += k2 * (1.0 + lambda * y * y) / (x * x);
        d.HJ += k2 * y * y / (x * x);
    }
    if (k3 != 0.0) {
        d.Hpy += k3 * (1.0 + lambda * x * x) / (y * y);
        d.HJ += k3 * x * x / (y * y);
    }
    return d;
}

PotentialForms sw_potential_three_forms(double lambda, double alpha, double k2,
                                        double k3, double x, double y) {
    if (k2 != 0.0 && x == 0.0)
        throw SingularityError("sw_potential_three_forms: x = 0 with k2 barrier");
    if (k3 != 0.0 && y == 0.0)
        throw SingularityError("sw_potential_three_forms: y = 0 with k3 barrier");
    const double a2h = 0.5 * alpha * alpha;
    const double r2 = x * x + y * y;
    const double mx = metric(lambda, x * x, "sw_potential_three_forms");
    const double my = metric(lambda, y * y, "sw_potential_three_forms");

    PotentialForms f;
    {
        const double zx = x / std::sqrt(my);
        const double mzx = 1.0 + lambda * zx * zx;
        double w1 = a2h * zx * zx / mzx;
        if (k2 != 0.0) w1 += k2 / (zx * zx);
        f.v_zx = w1 / my + a2h * y * y / my + (k3 != 0.0 ? k3 / (y * y) : 0.0);
    }
    {
        const double zy = y / std::sqrt(mx);
        const double mzy = 1.0 + lambda * zy * zy;
        double w2 = a2h * zy * zy / mzy;
        if (k3 != 0.0) w2 += k3 / (zy * zy);
        f.v_zy = w2 / mx + a2h * x * x / mx + (k2 != 0.0 ? k2 / (x * x) : 0.0);
    }
    {
        if (r2 == 0.0 && (k2 != 0.0 || k3 != 0.0))
            throw SingularityError("sw_potential_three_forms: origin with barriers");
        const double m = metric(lambda, r2, "sw_potential_three_forms(polar)");
        double g = 0.0;
        if (k2 != 0.0 || k3 != 0.0) {
            const double c2 = x * x / r2, s2 = y * y / r2;
            g = (k2 != 0.0 ? k2 / c2 : 0.0) + (k3 != 0.0 ? k3 / s2 : 0.0);
            g /= r2;
        }
        f.v_polar = a2h * r2 / m + g;
    }
    return f;
}

double higgs_lagrangian(double kappa, double x, double y, double vx, double vy,
                        double alpha) {
    const double r2 = x * x + y * y;
    const double m = 1.0 + kappa * r2;
    if (std::fabs(m) < 1e-13)
        throw DomainError("higgs_lagrangian: 1 + kappa r'^2 = 0");
    const double radial = x * vx + y * vy;
    const double kinetic =
        (vx * vx + vy * vy - kappa * radial * radial / m) / (2.0 * m);
    return kinetic - 0.5 * alpha * alpha * r2;
}

} // namespace losc::separability
