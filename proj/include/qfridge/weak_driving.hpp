// weak_driving.hpp — Weak-driving master equation in the co-rotating frame
//
// H_r = (Delta - delta - Omega) N_Delta + lambda (J_w^+ + J_w^-) with undriven
// dissipators on J_c (frequency delta) and J_h (frequency Delta).

#pragma once

#include "qfridge/params.hpp"
#include "qfridge/report.hpp"
#include "qfridge/superop.hpp"

namespace qfridge {

struct WeakDrivingGenerator {
    Superoperator L;
    CurrentSuperoperator Ic_super;
    CurrentSuperoperator Ih_super;
    SystemParams params;
    ReservoirPair reservoirs;

    SparseMatrix H0;    // delta N_delta + Delta N_Delta
    SparseMatrix drive; // lambda (J_w^- + J_w^+), rotating frame
};

WeakDrivingGenerator build_weak_generator(const SystemParams& p, const ReservoirParams& cold,
                                          const ReservoirParams& hot);

struct WeakDrivingSolution {
    Matrix rho; // rotating-frame steady state
    CurrentReport report;
    double drive_power{0.0}; // -i tr([H0, drive] rho), independent of the first law
    double min_eigenvalue{0.0};
};

WeakDrivingSolution solve_weak(const WeakDrivingGenerator& gen);

CurrentReport weak_currents(const WeakDrivingGenerator& gen);

/// Closed-form single-qutrit current in the strong-driving limit.
/// Throws std::invalid_argument unless n_qutrits == 1.
double analytic_current_lambda_inf(const SystemParams& p, const ReservoirParams& cold,
                                   const ReservoirParams& hot);

/// Cold current from the bosonic moment equations valid for N >> 1.
/// Throws std::domain_error away from resonance Omega = Delta - delta.
double large_N_moment_currents(const SystemParams& p, const ReservoirParams& cold,
                               const ReservoirParams& hot);

} // namespace qfridge
