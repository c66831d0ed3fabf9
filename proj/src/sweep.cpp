// sweep.cpp — Sweep orchestration, worker pool, CSV and boundary extraction

#include "qfridge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "qfridge/floquet_lindblad.hpp"
#include "qfridge/floquet_redfield.hpp"
#include "qfridge/weak_driving.hpp"

namespace qfridge {

std::string_view to_string(Backend b)
{
    switch (b) {
    case Backend::weak: return "weak";
    case Backend::floquet_lindblad: return "floquet-lindblad";
    case Backend::floquet_pauli: return "floquet-pauli";
    case Backend::redfield: return "redfield";
    }
    return "?";
}

Backend parse_backend(std::string_view name)
{
    for (const Backend b : {Backend::weak, Backend::floquet_lindblad, Backend::floquet_pauli,
                            Backend::redfield}) {
        if (name == to_string(b)) return b;
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

std::string_view to_string(AxisName a)
{
    switch (a) {
    case AxisName::Omega: return "Omega";
    case AxisName::lambda: return "lambda";
    case AxisName::N: return "N";
    }
    return "?";
}

AxisName parse_axis_name(std::string_view name)
{
    if (name == "Omega" || name == "omega") return AxisName::Omega;
    if (name == "lambda") return AxisName::lambda;
    if (name == "N" || name == "n_qutrits") return AxisName::N;
    throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

Axis Axis::linspace(AxisName name, double lo, double hi, int count)
{
    if (count < 1) throw std::invalid_argument("axis needs at least one point");
    Axis a;
    a.name = name;
    a.values.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        a.values.push_back(lo);
        return a;
    }
    const int n1 = count - 1;
    for (int i = 0; i < count; ++i) a.values.push_back((lo * (n1 - i) + hi * i) / n1);
    return a;
}

void SweepSpec::validate() const
{
    if (backends.empty()) throw std::invalid_argument("no backend selected");
    if (axes.empty() || axes.size() > 2) {
        throw std::invalid_argument("a sweep needs one or two axes");
    }
    for (const auto& a : axes) {
        if (a.values.empty()) throw std::invalid_argument("axis '" + std::string(to_string(a.name)) + "' is empty");
        for (const double v : a.values) {
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite axis value");
            if (a.name == AxisName::N && (v < 1.0 || v != std::round(v))) {
                throw std::invalid_argument("N axis values must be positive integers");
            }
        }
    }
    if (axes.size() == 2 && axes[0].name == axes[1].name) {
        throw std::invalid_argument("the two axes must differ");
    }
    const bool two = axes.size() == 2;
    if ((command == "map" || command == "check-conditions") && !two) {
        throw std::invalid_argument(command + " needs two axes");
    }
    if (command == "check-conditions") {
        for (const auto& a : axes) {
            if (a.name == AxisName::N) throw std::invalid_argument("check-conditions needs Omega and lambda axes");
        }
    }
    if (command == "scan" && two) throw std::invalid_argument("scan takes a single axis");
    if (command == "nscale" && (two || axes[0].name != AxisName::N)) {
        throw std::invalid_argument("nscale takes a single N axis");
    }
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (limits.redfield_cutoff_cap < 2) throw std::invalid_argument("redfield cutoff cap must be >= 2");
    system.validate();
    reservoirs.validate();
}

int backend_max_n(Backend b, const SolverLimits& limits)
{
    switch (b) {
    case Backend::weak: return limits.weak_max_n;
    case Backend::floquet_lindblad: return limits.full_max_n;
    case Backend::floquet_pauli: return std::numeric_limits<int>::max();
    case Backend::redfield: return limits.redfield_max_n;
    }
    return 0;
}

SystemParams apply_axis(SystemParams p, AxisName name, double value)
{
    switch (name) {
    case AxisName::Omega: p.Omega = value * p.delta; break;
    case AxisName::lambda: p.lambda = value * p.delta; break;
    case AxisName::N: p.n_qutrits = static_cast<int>(std::lround(value)); break;
    }
    return p;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPositivityTol = 1e-8;

std::string sanitize(std::string s)
{
    for (char& c : s) {
        if (c == ',' || c == ';' || c == '\n' || c == '\r' || c == '"') c = ' ';
    }
    return s;
}

void mark_failed(SweepRecord& r)
{
    r.failed = true;
    r.report = {kNaN, kNaN, kNaN, kNaN, false, kNaN};
}

} // namespace

SweepRecord evaluate_point(Backend b, SystemParams p, const ReservoirPair& res,
                           const SolverLimits& limits)
{
    SweepRecord r;
    r.backend = b;
    if (res.reversed()) r.flags.emplace_back("reversed_temperatures");
    try {
        const bool floquet_backend = b == Backend::floquet_lindblad || b == Backend::floquet_pauli;
        if (floquet_backend && p.lambda == 0.0) {
            p.lambda = 1e-9 * p.delta;
            r.flags.emplace_back("lambda_perturbed");
        }
        r.classification = std::string(to_string(cooling_conditions(p, res.cold, res.hot).classification));
        switch (b) {
        case Backend::weak: {
            const auto sol = solve_weak(build_weak_generator(p, res.cold, res.hot));
            r.report = sol.report;
            if (sol.min_eigenvalue < -kPositivityTol) r.flags.emplace_back("positivity_warning");
            break;
        }
        case Backend::floquet_lindblad:
        case Backend::floquet_pauli: {
            const auto mode = b == Backend::floquet_pauli ? FloquetMode::pauli : FloquetMode::full;
            const auto gen = build_floquet_lindblad(p, res.cold, res.hot, mode);
            if (gen.secular_warning) r.flags.emplace_back("secular_violation");
            const auto sol = solve_floquet_lindblad(gen);
            r.report = sol.report;
            if (sol.degenerate) r.flags.emplace_back("degenerate");
            if (sol.min_eigenvalue < -kPositivityTol) r.flags.emplace_back("positivity_warning");
            break;
        }
        case Backend::redfield: {
            CutoffPolicy policy;
            policy.cap = limits.redfield_cutoff_cap;
            const auto sb = build_redfield_sidebands(p, res.cold, res.hot, policy);
            const auto st = redfield_asymptotic(sb);
            r.report = period_averaged_currents(sb, st);
            if (!st.static_solve) r.flags.push_back("cutoff=" + std::to_string(st.cutoff));
            if (st.min_eigenvalue < -kPositivityTol) r.flags.emplace_back("positivity_warning");
            break;
        }
        }
        if (!r.report.cop_defined) r.flags.emplace_back("cop_undefined");
    } catch (const ConvergenceFailure&) {
        mark_failed(r);
        r.flags.emplace_back("nonconverged");
    } catch (const DegenerateSteadyState&) {
        mark_failed(r);
        r.flags.emplace_back("degenerate");
    } catch (const std::exception& e) {
        mark_failed(r);
        r.flags.push_back("error:" + sanitize(e.what()));
    }
    return r;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec)
{
    spec.validate();
    struct Task {
        double a1;
        std::optional<double> a2;
        Backend backend;
        SystemParams p;
    };
    std::vector<Task> tasks;
    const auto& ax1 = spec.axes[0];
    for (const double v1 : ax1.values) {
        const SystemParams p1 = apply_axis(spec.system, ax1.name, v1);
        if (spec.axes.size() == 1) {
            for (const Backend b : spec.backends) {
                if (p1.n_qutrits <= backend_max_n(b, spec.limits)) tasks.push_back({v1, {}, b, p1});
            }
            continue;
        }
        const auto& ax2 = spec.axes[1];
        for (const double v2 : ax2.values) {
            const SystemParams p2 = apply_axis(p1, ax2.name, v2);
            for (const Backend b : spec.backends) {
                if (p2.n_qutrits <= backend_max_n(b, spec.limits)) tasks.push_back({v1, v2, b, p2});
            }
        }
    }

    std::vector<SweepRecord> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            SweepRecord r = evaluate_point(t.backend, t.p, spec.reservoirs, spec.limits);
            r.axis1 = t.a1;
            r.axis2 = t.a2;
            rows[i] = std::move(r);
        }
    };
    const auto n_workers = static_cast<std::size_t>(std::max(1, spec.workers));
    if (n_workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < std::min(n_workers, tasks.size()); ++k) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return rows;
}

void annotate_nscale(const SweepSpec& spec, std::vector<SweepRecord>& rows)
{
    for (const Backend b : spec.backends) {
        SystemParams single = spec.system;
        single.n_qutrits = 1;
        const auto ref = evaluate_point(b, single, spec.reservoirs, spec.limits);
        std::vector<SweepRecord*> mine;
        for (auto& r : rows) {
            if (r.backend != b) continue;
            mine.push_back(&r);
            if (!ref.failed) r.classical_I_cold = r.axis1 * ref.report.I_cold;
        }
        const std::size_t n = mine.size();
        for (std::size_t i = 0; i < n && n >= 2; ++i) {
            const std::size_t lo = i == 0 ? 0 : i - 1;
            const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
            const double y0 = mine[lo]->report.I_cold;
            const double y1 = mine[hi]->report.I_cold;
            const double x0 = mine[lo]->axis1;
            const double x1 = mine[hi]->axis1;
            if (y0 > 0.0 && y1 > 0.0 && x1 != x0 && !mine[lo]->failed && !mine[hi]->failed) {
                mine[i]->loglog_slope = std::log(y1 / y0) / std::log(x1 / x0);
            }
        }
    }
}

namespace {

std::string num(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

} // namespace

void write_csv(std::ostream& os, const std::vector<SweepRecord>& rows, bool nscale_columns)
{
    os << "# energies and axes in units of delta (hbar = 1); I_cold, I_hot, power in delta^2;"
          " entropy_rate in delta; cop is the Carnot-renormalised coefficient of performance\n";
    os << "axis1,axis2,backend,I_cold,I_hot,power,cop,entropy_rate,classification,flags";
    if (nscale_columns) os << ",classical_I_cold,loglog_slope";
    os << '\n';
    for (const auto& r : rows) {
        os << num(r.axis1) << ',' << opt(r.axis2) << ',' << to_string(r.backend) << ','
           << num(r.report.I_cold) << ',' << num(r.report.I_hot) << ',' << num(r.report.power)
           << ',' << (r.report.cop_defined ? num(r.report.cop_renormalized) : "nan") << ','
           << num(r.report.entropy_rate) << ',' << r.classification << ',';
        for (std::size_t i = 0; i < r.flags.size(); ++i) os << (i ? ";" : "") << r.flags[i];
        if (nscale_columns) os << ',' << opt(r.classical_I_cold) << ',' << opt(r.loglog_slope);
        os << '\n';
    }
}

std::vector<BoundaryPoint> condition_boundaries(const SweepSpec& spec)
{
    spec.validate();
    if (spec.axes.size() != 2) throw std::invalid_argument("boundaries need two axes");
    const auto& ax1 = spec.axes[0];
    const auto& ax2 = spec.axes[1];
    const struct {
        const char* name;
        double CoolingConditions::*margin;
    } conds[] = {{"upper_gap", &CoolingConditions::upper_gap},
                 {"upper_cycle", &CoolingConditions::upper_cycle},
                 {"lower_cycle", &CoolingConditions::lower_cycle}};

    std::vector<BoundaryPoint> out;
    for (const auto& c : conds) {
        auto g = [&](double v1, double v2) {
            const SystemParams p = apply_axis(apply_axis(spec.system, ax1.name, v1), ax2.name, v2);
            return cooling_conditions(p, spec.reservoirs.cold, spec.reservoirs.hot).*(c.margin);
        };
        auto bisect = [&](auto&& f, double lo, double hi) {
            double flo = f(lo);
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((fm > 0.0) == (flo > 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        };
        // sign changes along axis 2 at fixed axis-1 nodes, then along axis 1
        for (const double v1 : ax1.values) {
            for (std::size_t j = 0; j + 1 < ax2.values.size(); ++j) {
                const double a = ax2.values[j];
                const double b = ax2.values[j + 1];
                if ((g(v1, a) > 0.0) == (g(v1, b) > 0.0)) continue;
                const double root = bisect([&](double x) { return g(v1, x); }, a, b);
                out.push_back({c.name, v1, root});
            }
        }
        for (const double v2 : ax2.values) {
            for (std::size_t i = 0; i + 1 < ax1.values.size(); ++i) {
                const double a = ax1.values[i];
                const double b = ax1.values[i + 1];
                if ((g(a, v2) > 0.0) == (g(b, v2) > 0.0)) continue;
                const double root = bisect([&](double x) { return g(x, v2); }, a, b);
                out.push_back({c.name, root, v2});
            }
        }
    }
    return out;
}

void write_boundaries_csv(std::ostream& os, const std::vector<BoundaryPoint>& pts)
{
    os << "condition,axis1,axis2\n";
    for (const auto& p : pts) os << p.condition << ',' << num(p.axis1) << ',' << num(p.axis2) << '\n';
}

} // namespace qfridge
