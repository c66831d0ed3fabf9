// floquet_lindblad.hpp — Secular Floquet master equation and its Pauli rate-equation form

#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "qfridge/collective_basis.hpp"
#include "qfridge/floquet.hpp"
#include "qfridge/report.hpp"
#include "qfridge/superop.hpp"

namespace qfridge {

enum class FloquetMode { full, pauli };

std::string_view to_string(FloquetMode mode);

/// One directed transition between collective Floquet states. The weights are
/// the energy taken from each reservoir when the transition happens.
struct PauliEdge {
    int from{0};
    int to{0};
    double cold_rate{0.0};
    double hot_rate{0.0};
    double cold_weight{0.0};
    double hot_weight{0.0};
    double energy_change{0.0}; // quasi-energy gained by the system

    double rate() const { return cold_rate + hot_rate; }
};

struct PauliRateMatrix {
    RealSparseMatrix R; // dp/dt = R p, zero column sums
    std::vector<PauliEdge> edges;
    int n_qutrits{1};

    int dim() const { return static_cast<int>(R.rows()); }
    /// max_j |sum_i R(i, j)|
    double column_sum_defect() const;
};

struct FloquetLindbladGenerator {
    FloquetMode mode{FloquetMode::pauli};
    Superoperator L; // full mode only, bare |M;m> coordinates
    CurrentSuperoperator Ic_super;
    CurrentSuperoperator Ih_super;
    PauliRateMatrix pauli; // pauli mode only
    FloquetData floquet;
    SystemParams params;
    ReservoirPair reservoirs;
    bool secular_warning{false};
};

/// Jump operators S_a^{+-} with cold rates gamma_c(-+(eps_a - Omega/2)) |<a|1>|^2 and
/// hot rates gamma_h(-+(eps_a + Omega/2)) |<a|2>|^2. A failed secular check only
/// sets secular_warning.
FloquetLindbladGenerator build_floquet_lindblad(const SystemParams& p, const ReservoirParams& cold,
                                                const ReservoirParams& hot, FloquetMode mode);

PauliRateMatrix build_pauli_rates(const SystemParams& p, const ReservoirPair& res,
                                  const FloquetData& f);

struct PauliSteadyState {
    Eigen::VectorXd p;
    int closed_classes{1};
    bool degenerate{false};
};

/// Stationary distribution. With several closed communicating classes each class
/// is solved on its own and the classes are weighted by their size.
PauliSteadyState pauli_steady_state(const PauliRateMatrix& R);

/// (I_cold, I_hot) from the stationary populations. Each transition pair is split
/// into its net flux and the exchange between the cold and hot channels.
std::pair<double, double> pauli_currents(const PauliRateMatrix& R, const Eigen::VectorXd& p);

/// Work delivered by the drive, sum over edges of flow x (energy change - reservoir share).
/// Independent of the currents, so P + I_c + I_h measures stationarity.
double pauli_drive_power(const PauliRateMatrix& R, const Eigen::VectorXd& p);

/// sum over edges of |flow| x (|cold weight| + |hot weight|), a scale for balance checks.
double pauli_gross_flow(const PauliRateMatrix& R, const Eigen::VectorXd& p);

struct FloquetLindbladSolution {
    CurrentReport report;
    double drive_power{0.0}; // pauli mode only
    bool degenerate{false};
    double min_eigenvalue{0.0};
    Eigen::VectorXd populations; // collective Floquet basis
    Matrix rho;                  // full mode only, bare coordinates
};

FloquetLindbladSolution solve_floquet_lindblad(const FloquetLindbladGenerator& gen);

CurrentReport floquet_lindblad_currents(const FloquetLindbladGenerator& gen);

/// Full-mode generator expressed in the collective Floquet basis.
SparseMatrix floquet_basis_generator(const FloquetLindbladGenerator& gen);

enum class CoolingClass { guaranteed_cooling, lower_cycle_candidate, none };

std::string_view to_string(CoolingClass c);

struct CoolingConditions {
    // each margin is positive when its inequality holds
    double upper_gap{0.0};   // eps_- - Omega/2
    double upper_cycle{0.0}; // beta_h (eps_+ + Omega/2) - beta_c (eps_+ - Omega/2)
    double lower_cycle{0.0}; // beta_c (eps_- - Omega/2) - beta_h (eps_- + Omega/2)
    bool condition1{false};
    bool condition2{false};
    bool lower_cycle_holds{false};
    CoolingClass classification{CoolingClass::none};
};

CoolingConditions cooling_conditions(const SystemParams& p, const ReservoirParams& cold,
                                     const ReservoirParams& hot);

} // namespace qfridge
