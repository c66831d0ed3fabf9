// sweep.hpp — Parameter sweeps over backends with deterministic CSV output

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfridge/params.hpp"
#include "qfridge/report.hpp"

namespace qfridge {

enum class Backend { weak, floquet_lindblad, floquet_pauli, redfield };

std::string_view to_string(Backend b);
/// Accepts weak, floquet-lindblad, floquet-pauli, redfield. Throws std::invalid_argument.
Backend parse_backend(std::string_view name);

enum class AxisName { Omega, lambda, N };

std::string_view to_string(AxisName a);
AxisName parse_axis_name(std::string_view name);

struct Axis {
    AxisName name{AxisName::Omega};
    std::vector<double> values; // Omega and lambda in units of delta

    /// count points from lo to hi inclusive; lo alone when count == 1.
    static Axis linspace(AxisName name, double lo, double hi, int count);
};

struct SolverLimits {
    int redfield_cutoff_cap{32};
    int redfield_max_n{10};
    int full_max_n{6};
    int weak_max_n{20};
};

struct SweepSpec {
    std::string command{"map"}; // map, scan, nscale, check-conditions
    std::vector<Backend> backends{Backend::floquet_pauli};
    std::vector<Axis> axes;
    SystemParams system;
    ReservoirPair reservoirs;
    SolverLimits limits;
    int workers{1};
    std::string out;

    /// Throws std::invalid_argument on an inconsistent spec.
    void validate() const;
};

struct SweepRecord {
    double axis1{0.0};
    std::optional<double> axis2;
    Backend backend{Backend::floquet_pauli};
    CurrentReport report;
    std::string classification;
    std::vector<std::string> flags;
    bool failed{false};
    // nscale extras
    std::optional<double> classical_I_cold;
    std::optional<double> loglog_slope;
};

/// Largest N a backend is run at under the given limits.
int backend_max_n(Backend b, const SolverLimits& limits);

/// One backend at one parameter point. Never throws for solver failures: they
/// become flagged rows.
SweepRecord evaluate_point(Backend b, SystemParams p, const ReservoirPair& res,
                           const SolverLimits& limits = {});

/// Parameters of a grid point with the axis values applied.
SystemParams apply_axis(SystemParams p, AxisName name, double value);

/// Rows in axis-major order, backends innermost. Results do not depend on workers.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// Fills classical_I_cold and loglog_slope for N-axis sweeps.
void annotate_nscale(const SweepSpec& spec, std::vector<SweepRecord>& rows);

void write_csv(std::ostream& os, const std::vector<SweepRecord>& rows, bool nscale_columns);

struct BoundaryPoint {
    std::string condition;
    double axis1{0.0};
    double axis2{0.0};
};

/// Points where each cooling inequality changes sign, located by bisection
/// between neighbouring grid nodes along both axes.
std::vector<BoundaryPoint> condition_boundaries(const SweepSpec& spec);

void write_boundaries_csv(std::ostream& os, const std::vector<BoundaryPoint>& pts);

} // namespace qfridge
