"""Spectral analysis of damped second-order systems via quadratic pencils."""

from .beam import (
    BeamBounds,
    BeamConfig,
    DampingProfile,
    QuadratureSpec,
    beam_bounds,
    beam_closed_form,
    discretize_beam,
    make_damping_profile,
    verify_beam_theorem,
)
from .config import ProblemConfig, Tolerances, build_pencil, load_config, random_pencil
from .errors import (
    ComputationError,
    ConfigError,
    InvalidArgumentError,
    QuadPencilError,
)
from .evolution import (
    SimulationTrace,
    discrete_energy_identity_report,
    energy_monotonicity_report,
    simulate,
    spectral_abscissa_consistency,
)
from .interlacing import ComparisonReport, check_form_order, compare_eigenvalues
from .linearization import (
    LinearizedSystem,
    SpectrumResult,
    build_linearization,
    check_pencil_equivalence,
    full_spectrum,
    resolvent_region_check,
    semisimplicity_check,
    structural_report,
)
from .pencil import (
    AlphaResult,
    AlphaSearch,
    DstarCertificate,
    DstarVerdict,
    OperatorKind,
    PencilScalars,
    QuadraticPencil,
    RayleighPair,
    SymmetricOperator,
    compute_alpha,
    compute_delta_gamma,
    compute_scalars,
    disc_radius,
    dstar_empty_certificate,
    evaluate_form,
    rayleigh_batch,
    rayleigh_pair,
    verify_gamma_as_form_ratio,
)
from .reports import Check, Report
from .variational import (
    EigenvalueDiagnostics,
    InertiaCount,
    IntervalDelta,
    MatrixQuadraticFamily,
    VariationalResult,
    generic_engine_fixture_2x2,
    inertia_negative,
    locate_real_eigenvalues,
    scalar_real_roots,
    verify_minmax,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaResult",
    "AlphaSearch",
    "BeamBounds",
    "BeamConfig",
    "Check",
    "ComparisonReport",
    "ComputationError",
    "ConfigError",
    "DampingProfile",
    "DstarCertificate",
    "DstarVerdict",
    "EigenvalueDiagnostics",
    "InertiaCount",
    "IntervalDelta",
    "InvalidArgumentError",
    "LinearizedSystem",
    "MatrixQuadraticFamily",
    "OperatorKind",
    "PencilScalars",
    "ProblemConfig",
    "QuadPencilError",
    "QuadraticPencil",
    "QuadratureSpec",
    "RayleighPair",
    "Report",
    "SimulationTrace",
    "SpectrumResult",
    "SymmetricOperator",
    "Tolerances",
    "VariationalResult",
    "beam_bounds",
    "beam_closed_form",
    "build_linearization",
    "build_pencil",
    "check_form_order",
    "check_pencil_equivalence",
    "compare_eigenvalues",
    "compute_alpha",
    "compute_delta_gamma",
    "compute_scalars",
    "disc_radius",
    "discretize_beam",
    "discrete_energy_identity_report",
    "dstar_empty_certificate",
    "energy_monotonicity_report",
    "evaluate_form",
    "full_spectrum",
    "generic_engine_fixture_2x2",
    "inertia_negative",
    "load_config",
    "locate_real_eigenvalues",
    "make_damping_profile",
    "random_pencil",
    "rayleigh_batch",
    "rayleigh_pair",
    "resolvent_region_check",
    "scalar_real_roots",
    "semisimplicity_check",
    "simulate",
    "spectral_abscissa_consistency",
    "structural_report",
    "verify_beam_theorem",
    "verify_gamma_as_form_ratio",
    "verify_minmax",
]
