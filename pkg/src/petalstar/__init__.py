"""Radius problems and geometry for the petal starlike class ``1 + asinh(z)``."""

from .errors import BracketError, ComputationError, DomainError
from .extremal import (
    FunctionSpec,
    GeneratorSpec,
    Witness,
    evaluate,
    f0_coefficients,
    log_derivative,
    sharpness_witness,
)
from .kernel import ASINH1, PowerSeries, asinh_principal, asinh_series, rho
from .petal import (
    ConicSpec,
    DiskSpec,
    InclusionGeometry,
    boundary,
    bounds,
    contains,
    inclusion_geometry,
    inscribed_disk_radius,
    symmetry_residuals,
)
from .radii import Method, RadiusResult
from .verify import VerificationReport, certify, check_inclusion, run_suite, sup_radius_oracle

__version__ = "0.1.0"

__all__ = [
    "ASINH1", "BracketError", "ComputationError", "ConicSpec", "DiskSpec", "DomainError",
    "FunctionSpec", "GeneratorSpec", "InclusionGeometry", "Method", "PowerSeries",
    "RadiusResult", "VerificationReport", "Witness", "asinh_principal", "asinh_series",
    "boundary", "bounds", "certify", "check_inclusion", "contains", "evaluate",
    "f0_coefficients", "inclusion_geometry", "inscribed_disk_radius", "log_derivative",
    "rho", "run_suite", "sharpness_witness", "sup_radius_oracle", "symmetry_residuals",
]
