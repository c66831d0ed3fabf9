# __init__.py — qfridge Python package
"""Steady-state heat currents of a collectively driven qutrit refrigerator."""

from ._qfridge import (
    ConvergenceFailure,
    CurrentReport,
    DegenerateSteadyState,
    NumericalFailure,
    ReservoirParams,
    SystemParams,
    analytic_current_lambda_inf,
    basis_dim,
    collective_operator,
    cooling_conditions,
    floquet_energies,
    floquet_lindblad_currents,
    large_N_moment_currents,
    preset_names,
    rate_gamma,
    redfield_currents,
    rotation_angle,
    secular_ok,
    spectral_density,
    weak_currents,
)

__all__ = [
    "ConvergenceFailure",
    "CurrentReport",
    "DegenerateSteadyState",
    "NumericalFailure",
    "ReservoirParams",
    "SystemParams",
    "analytic_current_lambda_inf",
    "basis_dim",
    "collective_operator",
    "cooling_conditions",
    "floquet_energies",
    "floquet_lindblad_currents",
    "large_N_moment_currents",
    "preset_names",
    "rate_gamma",
    "redfield_currents",
    "rotation_angle",
    "secular_ok",
    "spectral_density",
    "weak_currents",
]
