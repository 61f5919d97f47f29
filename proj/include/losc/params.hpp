#pragma once

// Parameter records and phase-space state shared by the classical modules.

#include <array>
#include <cstddef>

#include "losc/errors.hpp"

namespace losc {

// 1D deformed oscillator family: deformation lambda, frequency alpha and
// (optional) isotonic barrier strength k.
struct ModelParams1D {
    double lambda = 0.0;
    double alpha = 1.0;
    double k = 0.0;
};

// 2D families: deformed oscillator / deformed Smorodinsky-Winternitz
// (lambda, alpha, k2, k3) and the flat rational oscillator
// (omega0, n1, n2).
struct ModelParams2D {
    double lambda = 0.0;
    double alpha = 1.0;
    double k2 = 0.0;
    double k3 = 0.0;
    double omega0 = 1.0;
    int n1 = 1;
    int n2 = 1;
};

// A phase-space sample.  `w` holds either velocities or momenta; the kind
// flag disambiguates the Lagrangian and Hamiltonian pictures, which the
// models mix freely.
struct PhaseState {
    enum class Kind { velocity, momentum };

    std::array<double, 2> q{0.0, 0.0};
    std::array<double, 2> w{0.0, 0.0};
    std::size_t dim = 1;
    Kind kind = Kind::velocity;
    double t = 0.0;

    static PhaseState make1d(double x, double w0, Kind kind, double t = 0.0) {
        PhaseState s;
        s.q = {x, 0.0};
        s.w = {w0, 0.0};
        s.dim = 1;
        s.kind = kind;
        s.t = t;
        return s;
    }

    static PhaseState make2d(double x, double y, double wx, double wy,
                             Kind kind, double t = 0.0) {
        PhaseState s;
        s.q = {x, y};
        s.w = {wx, wy};
        s.dim = 2;
        s.kind = kind;
        s.t = t;
        return s;
    }

    void require_kind(Kind k, const char* where) const {
        if (kind != k)
            throw DomainError(std::string(where) +
                              ": state has the wrong velocity/momentum kind");
    }
};

} // namespace losc
