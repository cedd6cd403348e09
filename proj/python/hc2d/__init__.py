"""Relative motion of two hard-core bosons in a 2d harmonic trap.

Thin wrapper over the compiled core. All numerical work happens in C++;
this package only re-exports the bindings.
"""

from ._core import (
    ComputeError,
    CrossingEvent,
    DomainError,
    EigenState,
    EnergySplit,
    EvalResult,
    FdEigenvalue,
    GridConfig,
    OracleConfig,
    QfiKind,
    QfiValue,
    QuantumLabel,
    RadialProfile,
    RankedQfiPoint,
    SolverOptions,
    SpectrumTable,
    boundary_function,
    build_profile,
    default_labels,
    default_parameter_step,
    density_overlap,
    detect_crossings,
    digamma,
    energy_split,
    eval_radial_unnormalized,
    fd_eigenvalues,
    fisher_density,
    fisher_parameter,
    fisher_parameter_refined,
    free_energy,
    gamma,
    kummer_m,
    kummer_u_intb,
    linspace_grid,
    ordered_level_qfi,
    scan,
    solve_m_values,
    solve_state,
    __version__,
)

__all__ = [
    "ComputeError",
    "CrossingEvent",
    "DomainError",
    "EigenState",
    "EnergySplit",
    "EvalResult",
    "FdEigenvalue",
    "GridConfig",
    "OracleConfig",
    "QfiKind",
    "QfiValue",
    "QuantumLabel",
    "RadialProfile",
    "RankedQfiPoint",
    "SolverOptions",
    "SpectrumTable",
    "boundary_function",
    "build_profile",
    "default_labels",
    "default_parameter_step",
    "density_overlap",
    "detect_crossings",
    "digamma",
    "energy_split",
    "eval_radial_unnormalized",
    "fd_eigenvalues",
    "fisher_density",
    "fisher_parameter",
    "fisher_parameter_refined",
    "free_energy",
    "gamma",
    "kummer_m",
    "kummer_u_intb",
    "linspace_grid",
    "ordered_level_qfi",
    "scan",
    "solve_m_values",
    "solve_state",
    "__version__",
]
