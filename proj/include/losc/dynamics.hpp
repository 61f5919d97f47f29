#pragma once

// Numerical time integration of the classical models and measurement
// utilities (periods, conservation drift).

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "losc/classical.hpp"
#include "losc/params.hpp"

namespace losc::dynamics {

// Packed ODE state: [q_1..q_dim, w_1..w_dim].
using StateVec = std::array<double, 4>;

struct OdeModel {
    std::string name;
    std::size_t dim = 1;
    PhaseState::Kind kind = PhaseState::Kind::velocity;
    std::function<void(double, const StateVec&, StateVec&)> rhs;
    // Returns false when the state left the admissible domain (guard band).
    std::function<bool(const StateVec&)> domain_ok;
};

struct IntegratorConfig {
    enum class Method { rk4, rk45_adaptive };
    Method method = Method::rk4;
    double dt = 1e-3;    // fixed-step size (rk4)
    double tol = 1e-10;  // local error tolerance (rk45)
    double t_end = 10.0;
    std::int64_t max_steps = 100'000'000;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;
    std::string model_name;
    std::int64_t steps = 0;
    std::int64_t rejected_steps = 0;
};

// Integrates from s0 (matching the model's kind) to cfg.t_end.  Throws
// DomainExitError when the guard trips and MaxStepsExceeded past the budget.
Trajectory integrate(const OdeModel& model, const PhaseState& s0,
                     const IntegratorConfig& cfg);

// Period estimated from zero crossings of the chosen w-component, linearly
// interpolated and averaged over available cycles.  Needs >= 3 crossings.
double measure_period(const Trajectory& traj, std::size_t coordinate_index);

// max over samples of |q(s_t) - q(s_0)| / max(|q(s_0)|, 1).
double conservation_drift(const Trajectory& traj, const classical::ConservedQuantity& q);
// Serial reference implementation (the default is OpenMP-parallel).
double conservation_drift_serial(const Trajectory& traj,
                                 const classical::ConservedQuantity& q);

// Writes header t,q1,...,v1,... with 17 significant digits per value.
void export_csv(const Trajectory& traj, const std::string& path);

// --- model factories -------------------------------------------------------

// 1D deformed oscillator (velocity form), isotonic barrier included via p.k.
OdeModel make_model_1d(const ModelParams1D& p);

// 2D deformed oscillator / deformed S-W in Hamiltonian (momentum) form.
OdeModel make_model_2d_hamiltonian(const ModelParams2D& p);

// Same dynamics in Euler-Lagrange (velocity) form, used for the
// Legendre-consistency check.
OdeModel make_model_2d_lagrangian(const ModelParams2D& p);

// Flat rational oscillator (momentum form).
OdeModel make_model_rational(const ModelParams2D& p);

// Curved S-W system in geodesic polar coordinates (velocity form,
// state [rho, phi, v_rho, v_phi]).
OdeModel make_model_curved_sw(double kappa, const classical::CurvedSWParams& cp);

// Conversion helpers between the two pictures of the 2D deformed family.
PhaseState to_velocity_kind(const ModelParams2D& p, const PhaseState& s);
PhaseState to_momentum_kind(const ModelParams2D& p, const PhaseState& s);

} // namespace losc::dynamics
