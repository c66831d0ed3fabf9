// floquet_redfield.hpp — Non-secular Floquet-Redfield generator with three Fourier sidebands
//
// L(t) = L0 + L+ e^{+i Omega t} + L- e^{-i Omega t} in the Schroedinger picture.

#pragma once

#include <vector>

#include "qfridge/floquet.hpp"
#include "qfridge/report.hpp"
#include "qfridge/superop.hpp"

namespace qfridge {

struct CutoffPolicy {
    int start{1};
    int cap{32};
    double rel_tol{1e-3}; // relative change of the cold current between cutoffs c and 2c
};

/// Sideband n of the counting superoperator multiplies e^{i n Omega t}.
struct CurrentSidebands {
    CurrentSuperoperator zero;
    CurrentSuperoperator plus;
    CurrentSuperoperator minus;
};

struct RedfieldSidebands {
    Superoperator L0;
    Superoperator Lplus;
    Superoperator Lminus;
    CurrentSidebands cold;
    CurrentSidebands hot;
    FloquetData floquet;
    SystemParams params;
    ReservoirPair reservoirs;
    CutoffPolicy policy;
};

RedfieldSidebands build_redfield_sidebands(const SystemParams& p, const ReservoirParams& cold,
                                           const ReservoirParams& hot,
                                           const CutoffPolicy& policy = {});

/// Redfield generator at time t, assembled from the sidebands.
SparseMatrix redfield_generator_at(const RedfieldSidebands& sb, double t);

struct AsymptoticState {
    FourierState state;
    int cutoff{0};
    double metric{0.0};          // relative current change that accepted the cutoff
    std::vector<double> history; // one entry per doubling
    bool static_solve{false};    // Omega == 0 route
    bool monotone{true};         // successive changes decreased
    double min_eigenvalue{0.0};  // of rho^(0)
};

/// Asymptotic periodic state at a fixed cutoff.
AsymptoticState redfield_asymptotic_fixed(const RedfieldSidebands& sb, int cutoff);

/// Adaptive cutoff: doubles from policy.start until the period-averaged currents
/// change by less than policy.rel_tol; throws ConvergenceFailure past policy.cap.
AsymptoticState redfield_asymptotic(const RedfieldSidebands& sb);

/// Period-averaged currents tr(K0 rho0 + K- rho^(+1) + K+ rho^(-1)). Throws
/// NumericalFailure when the imaginary residue exceeds 1e-9.
CurrentReport period_averaged_currents(const RedfieldSidebands& sb, const AsymptoticState& st);

} // namespace qfridge
