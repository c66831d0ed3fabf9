// bindings.cpp — Python module exposing the qfridge solvers

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfridge/collective_basis.hpp"
#include "qfridge/config.hpp"
#include "qfridge/floquet.hpp"
#include "qfridge/floquet_lindblad.hpp"
#include "qfridge/floquet_redfield.hpp"
#include "qfridge/weak_driving.hpp"

namespace py = pybind11;
using namespace qfridge;

namespace {

ReservoirPair pair_of(const ReservoirParams& cold, const ReservoirParams& hot)
{
    ReservoirPair r{cold, hot};
    r.cold.label = ReservoirLabel::cold;
    r.hot.label = ReservoirLabel::hot;
    return r;
}

CurrentReport redfield_currents(const SystemParams& p, const ReservoirParams& cold,
                                const ReservoirParams& hot, int cutoff_cap)
{
    CutoffPolicy policy;
    policy.cap = cutoff_cap;
    const auto sb = build_redfield_sidebands(p, cold, hot, policy);
    return period_averaged_currents(sb, redfield_asymptotic(sb));
}

} // namespace

PYBIND11_MODULE(_qfridge, m)
{
    m.doc() = "Steady-state heat currents of a collectively driven qutrit refrigerator";

    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);
    py::register_exception<DegenerateSteadyState>(m, "DegenerateSteadyState", PyExc_RuntimeError);
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", PyExc_RuntimeError);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init([](double delta, double Delta, double Omega, double lambda, int n) {
                 SystemParams p{delta, Delta, Omega, lambda, n};
                 p.validate();
                 return p;
             }),
             py::arg("delta") = 1.0, py::arg("Delta") = 2.0, py::arg("Omega") = 0.0,
             py::arg("lambda_") = 0.0, py::arg("n_qutrits") = 1)
        .def_readwrite("delta", &SystemParams::delta)
        .def_readwrite("Delta", &SystemParams::Delta)
        .def_readwrite("Omega", &SystemParams::Omega)
        .def_readwrite("lambda_", &SystemParams::lambda)
        .def_readwrite("n_qutrits", &SystemParams::n_qutrits)
        .def("__repr__", [](const SystemParams& p) {
            return "SystemParams(delta=" + std::to_string(p.delta) + ", Delta=" +
                   std::to_string(p.Delta) + ", Omega=" + std::to_string(p.Omega) +
                   ", lambda_=" + std::to_string(p.lambda) +
                   ", n_qutrits=" + std::to_string(p.n_qutrits) + ")";
        });

    py::class_<ReservoirParams>(m, "ReservoirParams")
        .def(py::init([](double beta, double gamma_bare, double sigma) {
                 ReservoirParams r{beta, gamma_bare, sigma, ReservoirLabel::cold};
                 r.validate();
                 return r;
             }),
             py::arg("beta") = 1.0, py::arg("gamma_bare") = 0.1, py::arg("sigma") = 1.0)
        .def_readwrite("beta", &ReservoirParams::beta)
        .def_readwrite("gamma_bare", &ReservoirParams::gamma_bare)
        .def_readwrite("sigma", &ReservoirParams::sigma);

    py::class_<CurrentReport>(m, "CurrentReport")
        .def_readonly("I_cold", &CurrentReport::I_cold)
        .def_readonly("I_hot", &CurrentReport::I_hot)
        .def_readonly("power", &CurrentReport::power)
        .def_readonly("cop_renormalized", &CurrentReport::cop_renormalized)
        .def_readonly("cop_defined", &CurrentReport::cop_defined)
        .def_readonly("entropy_rate", &CurrentReport::entropy_rate);

    m.def("spectral_density", &spectral_density, py::arg("omega"), py::arg("reservoir"));
    m.def("rate_gamma", &rate_gamma, py::arg("omega"), py::arg("reservoir"));
    m.def("basis_dim", &basis_dim, py::arg("n_qutrits"));
    m.def("floquet_energies", &floquet_energies, py::arg("params"));
    m.def("rotation_angle", &rotation_angle, py::arg("params"));

    m.def(
        "collective_operator",
        [](const std::string& name, int n, double alpha) {
            static const std::pair<const char*, LadderKind> kinds[] = {
                {"Jc+", LadderKind::Jc_plus},      {"Jc-", LadderKind::Jc_minus},
                {"Jh+", LadderKind::Jh_plus},      {"Jh-", LadderKind::Jh_minus},
                {"Jw+", LadderKind::Jw_plus},      {"Jw-", LadderKind::Jw_minus},
                {"S-+", LadderKind::Sminus_plus},  {"S--", LadderKind::Sminus_minus},
                {"S++", LadderKind::Splus_plus},   {"S+-", LadderKind::Splus_minus},
                {"N_delta", LadderKind::number_small}, {"N_Delta", LadderKind::number_large}};
            for (const auto& [key, kind] : kinds) {
                if (name == key) return Matrix(build_operator(kind, n, alpha).matrix);
            }
            throw py::value_error("unknown operator '" + name + "'");
        },
        py::arg("name"), py::arg("n_qutrits"), py::arg("alpha") = 0.0);

    m.def(
        "weak_currents",
        [](const SystemParams& p, const ReservoirParams& c, const ReservoirParams& h) {
            return weak_currents(build_weak_generator(p, c, h));
        },
        py::arg("params"), py::arg("cold"), py::arg("hot"));
    m.def(
        "floquet_lindblad_currents",
        [](const SystemParams& p, const ReservoirParams& c, const ReservoirParams& h,
           const std::string& mode) {
            if (mode != "pauli" && mode != "full") throw py::value_error("mode must be 'pauli' or 'full'");
            const auto m = mode == "pauli" ? FloquetMode::pauli : FloquetMode::full;
            return floquet_lindblad_currents(build_floquet_lindblad(p, c, h, m));
        },
        py::arg("params"), py::arg("cold"), py::arg("hot"), py::arg("mode") = "pauli");
    m.def("redfield_currents", &redfield_currents, py::arg("params"), py::arg("cold"),
          py::arg("hot"), py::arg("cutoff_cap") = 32);
    m.def("analytic_current_lambda_inf", &analytic_current_lambda_inf, py::arg("params"),
          py::arg("cold"), py::arg("hot"));
    m.def("large_N_moment_currents", &large_N_moment_currents, py::arg("params"),
          py::arg("cold"), py::arg("hot"));
    m.def(
        "cooling_conditions",
        [](const SystemParams& p, const ReservoirParams& c, const ReservoirParams& h) {
            const auto cc = cooling_conditions(p, c, h);
            py::dict d;
            d["classification"] = std::string(to_string(cc.classification));
            d["condition1"] = cc.condition1;
            d["condition2"] = cc.condition2;
            d["lower_cycle"] = cc.lower_cycle_holds;
            return d;
        },
        py::arg("params"), py::arg("cold"), py::arg("hot"));
    m.def(
        "secular_ok",
        [](const SystemParams& p, const ReservoirParams& c, const ReservoirParams& h) {
            return secular_validity(p, pair_of(c, h)).ok;
        },
        py::arg("params"), py::arg("cold"), py::arg("hot"));
    m.def("preset_names", &preset_names);
}
