#include "losc/quantum1d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace losc::quantum1d {

namespace {

// Envelope (1 + L y^2)^{-c / (2 L)}, continuous through L = 0 where it is
// exp(-c y^2 / 2).
double power_envelope(double Lambda, double c, double y) {
    const double z = Lambda * y * y;
    if (Lambda == 0.0) return std::exp(-0.5 * c * y * y);
    if (z <= -1.0)
        throw DomainError("power_envelope: 1 + Lambda y^2 <= 0");
    return std::exp(-c * std::log1p(z) / (2.0 * Lambda));
}

int parity_start(Parity p) { return p == Parity::even ? 0 : 1; }

void require_domain(double lambda, const grid::GridSpec& g) {
    if (lambda < 0.0) {
        const double bound = 1.0 / std::sqrt(-lambda);
        if (std::fabs(g.a) >= bound || std::fabs(g.b) >= bound)
            throw DomainError("grid extends to |x| >= 1/sqrt(|lambda|)");
    }
}

} // namespace

double invariant_measure_weight(double lambda, double x) {
    const double m = 1.0 + lambda * x * x;
    if (m <= 0.0)
        throw DomainError("invariant_measure_weight: 1 + lambda x^2 <= 0");
    return 1.0 / std::sqrt(m);
}

SeriesSolution series_solve(double Lambda, double energy, Parity parity, int n_max) {
    if (n_max < 2) throw DomainError("series_solve: n_max must be >= 2");
    SeriesSolution out;
    out.parity = parity;
    out.energy = energy;
    out.coefficients.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    const int s = parity_start(parity);
    out.coefficients[s] = 1.0;

    bool dead = false;
    for (int n = s; n + 2 <= n_max; n += 2) {
        if (dead) break;
        const double factor = Lambda * n * n - 2.0 * n + (2.0 * energy - 1.0);
        const double scale =
            std::max({1.0, std::fabs(Lambda) * n * n, 2.0 * std::fabs(energy)});
        if (std::fabs(factor) < 1e-12 * scale) {
            out.terminated_at = n;
            dead = true; // all higher coefficients vanish
            continue;
        }
        out.coefficients[n + 2] =
            -out.coefficients[n] * factor / ((n + 2.0) * (n + 1.0));
    }

    // Empirical lim |a_{n+2}/a_n|.  The raw ratio converges only like
    // L (1 - 3/n + ...), so extrapolate the 1/n term away using the last two
    // available nonzero pairs.
    if (!out.terminated_at) {
        double r[2] = {0.0, 0.0};
        int idx[2] = {0, 0};
        int have = 0;
        for (int n = n_max - 2; n >= s && have < 2; n -= 2) {
            const double an = out.coefficients[n], an2 = out.coefficients[n + 2];
            if (an != 0.0 && an2 != 0.0) {
                r[have] = std::fabs(an2 / an);
                idx[have] = n;
                ++have;
            }
        }
        if (have == 2 && idx[0] != idx[1])
            out.ratio_estimate =
                (idx[0] * r[0] - idx[1] * r[1]) / double(idx[0] - idx[1]);
        else if (have >= 1)
            out.ratio_estimate = r[0];
    }
    return out;
}

std::optional<long> max_bound_index(double beta, double lambda) {
    if (beta <= 0.0) throw DomainError("max_bound_index: beta must be positive");
    if (lambda <= 0.0) return std::nullopt;
    // Equality beta - lambda n / 2 = 0 is admitted; the 1e-9 nudge absorbs
    // roundoff in 2 beta / lambda.
    return static_cast<long>(std::floor(2.0 * beta / lambda + 1e-9));
}

double energy_series(double Lambda, int p) {
    if (p < 0) throw DomainError("energy_series: p must be >= 0");
    if (Lambda > 0.0) {
        const auto nmax = max_bound_index(1.0, Lambda);
        if (nmax && p > *nmax)
            throw NotBoundStateError("energy_series: p = " + std::to_string(p) +
                                     " exceeds max bound index " + std::to_string(*nmax));
    }
    return p * (1.0 - 0.5 * Lambda * p) + 0.5;
}

double energy_ladder(double beta, double lambda, int n) {
    if (n < 0) throw DomainError("energy_ladder: n must be >= 0");
    const auto nmax = max_bound_index(beta, lambda);
    if (nmax && n > *nmax)
        throw NotBoundStateError("energy_ladder: n = " + std::to_string(n) +
                                 " exceeds max bound index " + std::to_string(*nmax));
    return n * beta - 0.5 * n * n * lambda + 0.5 * beta;
}

double ground_state_unnormalized(double beta, double lambda, double x) {
    if (lambda == 0.0) return std::exp(-0.5 * beta * x * x);
    const double m = 1.0 + lambda * x * x;
    if (m <= 0.0)
        throw DomainError("ground_state: 1 + lambda x^2 <= 0");
    return std::exp(-beta * std::log1p(lambda * x * x) / (2.0 * lambda));
}

grid::GridFunction ground_state(double beta, double lambda, const grid::GridSpec& g) {
    require_domain(lambda, g);
    if (beta <= 0.0)
        throw NotNormalizableError("ground_state: beta <= 0 gives a divergent dmu-norm");
    auto psi = grid::GridFunction::sample(
        g, [&](double x) { return ground_state_unnormalized(beta, lambda, x); });
    const double n2 = inner_product_mu(psi, psi, lambda);
    if (!std::isfinite(n2) || n2 <= 0.0)
        throw NotNormalizableError("ground_state: dmu-norm is not finite");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : psi.values) v *= inv;
    return psi;
}

double series_eigenfunction(double Lambda, int p, double y) {
    const auto sol = series_solve(Lambda, energy_series(Lambda, p),
                                  p % 2 == 0 ? Parity::even : Parity::odd,
                                  std::max(2, p + 2));
    double poly = 0.0;
    for (int n = static_cast<int>(sol.coefficients.size()) - 1; n >= 0; --n)
        poly = poly * y + sol.coefficients[n];
    return poly * power_envelope(Lambda, 1.0, y);
}

grid::GridFunction apply_hamiltonian_1d(const QuantumParams& qp,
                                        const grid::GridFunction& psi) {
    require_domain(qp.lambda, psi.spec);
    grid::check_resolution(psi);
    const auto d1 = grid::deriv1(psi);
    const auto d2 = grid::deriv2(psi);
    grid::GridFunction out{psi.spec, std::vector<double>(psi.size(), 0.0), d2.margin};
    const double l = qp.lambda, a2 = qp.alpha2();
    const double hm = qp.hbar / qp.mass;
    for (int i = out.margin; i < out.size() - out.margin; ++i) {
        const double x = psi.spec.x(i);
        const double m = 1.0 + l * x * x;
        out.values[i] = qp.hbar * (-0.5 * hm * (m * d2.values[i] + l * x * d1.values[i]) +
                                   0.5 * (a2 / qp.hbar) * x * x / m * psi.values[i]);
    }
    return out;
}

namespace {

grid::GridFunction apply_A_impl(double beta, double lambda,
                                const grid::GridFunction& psi, double deriv_sign) {
    require_domain(lambda, psi.spec);
    const auto d1 = grid::deriv1(psi);
    grid::GridFunction out{psi.spec, std::vector<double>(psi.size(), 0.0), d1.margin};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = out.margin; i < out.size() - out.margin; ++i) {
        const double x = psi.spec.x(i);
        const double sq = std::sqrt(1.0 + lambda * x * x);
        out.values[i] =
            inv_sqrt2 * (deriv_sign * sq * d1.values[i] + beta * x / sq * psi.values[i]);
    }
    return out;
}

} // namespace

grid::GridFunction apply_A(double beta, double lambda, const grid::GridFunction& psi) {
    return apply_A_impl(beta, lambda, psi, +1.0);
}

grid::GridFunction apply_Aplus(double beta, double lambda,
                               const grid::GridFunction& psi) {
    return apply_A_impl(beta, lambda, psi, -1.0);
}

double inner_product_mu(const grid::GridFunction& f, const grid::GridFunction& g,
                        double lambda) {
    if (f.size() != g.size() || f.spec.a != g.spec.a || f.spec.b != g.spec.b)
        throw DomainError("inner_product_mu: mismatched grids");
    const int margin = std::max(f.margin, g.margin);
    grid::GridFunction prod{f.spec, std::vector<double>(f.size(), 0.0), 0};
    for (int i = margin; i < f.size() - margin; ++i)
        prod.values[i] =
            f.values[i] * g.values[i] * invariant_measure_weight(lambda, f.spec.x(i));
    return grid::simpson(prod);
}

LadderEigenfunction ladder_eigenfunction(double beta, double lambda, int n,
                                         const grid::GridSpec& g) {
    if (n < 0) throw DomainError("ladder_eigenfunction: n must be >= 0");
    const auto nmax = max_bound_index(beta, lambda);
    if (nmax && n > *nmax)
        throw NotBoundStateError("ladder_eigenfunction: n exceeds max bound index");
    const double beta_n = beta - n * lambda;
    if (beta_n <= 0.0)
        throw NotNormalizableError(
            "ladder_eigenfunction: Psi_0(beta - n lambda) is not normalizable");

    auto psi = ground_state(beta_n, lambda, g);
    for (int k = n - 1; k >= 0; --k) {
        psi = apply_Aplus(beta - k * lambda, lambda, psi);
        const double norm2 = inner_product_mu(psi, psi, lambda);
        if (!std::isfinite(norm2) || norm2 <= 0.0)
            throw GridTooCoarse("ladder_eigenfunction: lost normalization on grid");
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : psi.values) v *= inv;
    }

    LadderEigenfunction out;
    out.energy = energy_ladder(beta, lambda, n);
    const QuantumParams qp{lambda, beta, 1.0, 1.0};
    auto hpsi = apply_hamiltonian_1d(qp, psi);
    grid::GridFunction res{psi.spec, std::vector<double>(psi.size(), 0.0), hpsi.margin};
    for (int i = res.margin; i < res.size() - res.margin; ++i)
        res.values[i] = hpsi.values[i] - out.energy * psi.values[i];
    const double rn = inner_product_mu(res, res, lambda);
    const double pn = inner_product_mu(psi, psi, lambda);
    out.residual = std::sqrt(std::max(rn, 0.0) / pn);
    out.psi = std::move(psi);
    return out;
}

double shape_invariance_residual(double beta, double lambda,
                                 const grid::GridFunction& psi) {
    // AA+(beta) psi vs A+A(beta - lambda) psi + R(beta - lambda) psi,
    // R(beta) = beta + lambda / 2.
    const auto lhs = apply_A(beta, lambda, apply_Aplus(beta, lambda, psi));
    const auto rhs = apply_Aplus(beta - lambda, lambda, apply_A(beta - lambda, lambda, psi));
    const double R = (beta - lambda) + 0.5 * lambda;
    grid::GridFunction res{psi.spec, std::vector<double>(psi.size(), 0.0),
                           std::max(lhs.margin, rhs.margin)};
    for (int i = res.margin; i < res.size() - res.margin; ++i)
        res.values[i] = lhs.values[i] - rhs.values[i] - R * psi.values[i];
    const double rn = inner_product_mu(res, res, lambda);
    const double pn = inner_product_mu(psi, psi, lambda);
    return std::sqrt(std::max(rn, 0.0) / pn);
}

std::vector<SpectrumEntry> closed_form_spectrum(const QuantumParams& qp, int levels,
                                                Provenance route) {
    std::vector<SpectrumEntry> out;
    for (int n = 0; n < levels; ++n) {
        const auto nmax = max_bound_index(qp.beta, qp.lambda);
        if (nmax && n > *nmax) break;
        SpectrumEntry e;
        e.n = n;
        e.provenance = route;
        if (route == Provenance::ladder) {
            e.energy = energy_ladder(qp.beta, qp.lambda, n);
        } else {
            e.energy = qp.hbar * qp.beta * energy_series(qp.Lambda(), n);
        }
        out.push_back(e);
    }
    return out;
}

} // namespace losc::quantum1d
