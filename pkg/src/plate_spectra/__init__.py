"""Eigenvalue bounds and spectra for the clamped plate on unit-area rectangles."""

from .beam import (
    BeamMode,
    RhoResult,
    beam_frequency,
    beam_mode,
    rho_derivative_check,
    rho_determinant,
    rho_fd_oracle,
    rho_richardson,
)
from .bounds import (
    SQUARE_LAMBDA1_LOWER,
    SQUARE_LAMBDA1_UPPER,
    BoundReport,
    RectAspect,
    bracket_optimal_aspect,
    liyau_bound,
    owen_bound,
    owen_monotonicity_scan,
    separable_gamma1,
    simple_bound,
)
from .numerics import (
    Interval,
    QuadratureRule,
    SymmetricMatrix,
    bisect_root,
    gauss_legendre,
    sym_eigs,
    sym_gen_eigs,
)
from .rect_spectra import (
    CLAMPED_RITZ,
    DIRICHLET_LAPLACIAN,
    NAVIER,
    MinimiserScan,
    SpectrumTable,
    WeylParams,
    kth_value,
    laplacian_spectrum,
    lattice_inequality_sides,
    minimiser_scan,
    navier_spectrum,
    weyl_two_term,
)
from .ritz import RitzBasisSpec, RitzSolution, assemble_ritz, lambda1_curve, ritz_eigs

__version__ = "0.1.0"

__all__ = [
    "BeamMode",
    "BoundReport",
    "CLAMPED_RITZ",
    "DIRICHLET_LAPLACIAN",
    "Interval",
    "MinimiserScan",
    "NAVIER",
    "QuadratureRule",
    "RectAspect",
    "RhoResult",
    "RitzBasisSpec",
    "RitzSolution",
    "SQUARE_LAMBDA1_LOWER",
    "SQUARE_LAMBDA1_UPPER",
    "SpectrumTable",
    "SymmetricMatrix",
    "WeylParams",
    "assemble_ritz",
    "beam_frequency",
    "beam_mode",
    "bisect_root",
    "bracket_optimal_aspect",
    "gauss_legendre",
    "kth_value",
    "lambda1_curve",
    "laplacian_spectrum",
    "lattice_inequality_sides",
    "liyau_bound",
    "minimiser_scan",
    "navier_spectrum",
    "owen_bound",
    "owen_monotonicity_scan",
    "rho_derivative_check",
    "rho_determinant",
    "rho_fd_oracle",
    "rho_richardson",
    "ritz_eigs",
    "separable_gamma1",
    "simple_bound",
    "sym_eigs",
    "sym_gen_eigs",
    "weyl_two_term",
]
