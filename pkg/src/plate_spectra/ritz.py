"""Rayleigh-Ritz upper bounds for clamped-plate eigenvalues on R_a.

The trial space is the tensor product of clamped-beam modes scaled to the
rectangle sides,

    phi_(m,n)(x, y) = X_m(x/a) a^(-1/2) * X_n(y a) a^(1/2),

which satisfies the clamped conditions exactly and is L2-orthonormal up to
quadrature error.  With G, D2, C the unit-interval Gram matrices of
(X, X), (X'', X'') and (X'', X), the bending matrix decomposes as

    A = a^-4 kron(D2, G) + a^4 kron(G, D2) + 2 kron(C, C),

and the pencil (A, B), B = kron(G, G), yields eigenvalues that over-estimate
the true clamped values (variational principle, exact arithmetic); the
reported Gram deviation max|B - I| bounds the quadrature budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .beam import beam_mode
from .bounds import RectAspect
from .errors import QuadratureUnderResolvedError
from .numerics import SymmetricMatrix, gauss_legendre, sym_gen_eigs
from .parallel import parallel_map

MIN_MODES = 2
MAX_MODES = 40

GRAM_DEVIATION_LIMIT = 1e-6


@dataclass(frozen=True)
class RitzBasisSpec:
    """Tensor beam-mode basis: modes 1..M in each direction, M^2 in total."""

    a: RectAspect
    modes_per_direction: int

    def __post_init__(self) -> None:
        m = self.modes_per_direction
        if not MIN_MODES <= m <= MAX_MODES:
            raise ValueError(f"modes per direction must be in [{MIN_MODES}, {MAX_MODES}], got {m}")

    @property
    def dimension(self) -> int:
        return self.modes_per_direction**2

    @property
    def max_count(self) -> int:
        """Only the lower half of the Ritz spectrum is trustworthy."""
        return self.dimension // 2


@dataclass(frozen=True)
class RitzSolution:
    """Ascending upper bounds for lambda_1..lambda_count at fixed (a, M)."""

    spec: RitzBasisSpec
    eigenvalues: tuple[float, ...]
    count: int
    gram_deviation: float


def _quadrature_order(modes: int) -> int:
    # Integrands are products of two beam modes (oscillation ~ (M + 1/2) pi
    # each); 2M + 8 nodes resolve them with margin, floor keeps tiny bases
    # exact too.
    return min(256, max(2 * modes + 8, 32))


@lru_cache(maxsize=None)
def _unit_interval_matrices(modes: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(G, D2, C): Gram matrices of (X, X), (X'', X''), (X'', X) on [0, 1]."""
    rule = gauss_legendre(_quadrature_order(modes))
    x, w = rule.mapped_to(0.0, 1.0)
    vals = np.empty((modes, len(x)))
    curvs = np.empty((modes, len(x)))
    for j in range(1, modes + 1):
        mode = beam_mode(j)
        vals[j - 1] = mode.value(x)
        curvs[j - 1] = mode.d2(x)
    wv = vals * w
    gram = wv @ vals.T
    bend = (curvs * w) @ curvs.T
    cross = (curvs * w) @ vals.T
    # C is symmetric analytically (integration by parts: int X''Y = -int X'Y').
    return (
        0.5 * (gram + gram.T),
        0.5 * (bend + bend.T),
        0.5 * (cross + cross.T),
    )


@lru_cache(maxsize=None)
def _assemble_dense(a_value: float, modes: int) -> tuple[np.ndarray, np.ndarray, float]:
    gram, bend, cross = _unit_interval_matrices(modes)
    t = a_value**4
    stiff = (1.0 / t) * np.kron(bend, gram) + t * np.kron(gram, bend) + 2.0 * np.kron(cross, cross)
    mass = np.kron(gram, gram)
    deviation = float(np.max(np.abs(mass - np.eye(mass.shape[0]))))
    if deviation > GRAM_DEVIATION_LIMIT:
        raise QuadratureUnderResolvedError(
            f"Gram matrix deviates from identity by {deviation:.3e} at M={modes}"
        )
    return 0.5 * (stiff + stiff.T), mass, deviation


def assemble_ritz(spec: RitzBasisSpec) -> tuple[SymmetricMatrix, SymmetricMatrix]:
    """Bending and mass Gram matrices of the tensor basis on R_a."""
    stiff, mass, _ = _assemble_dense(spec.a.a, spec.modes_per_direction)
    return SymmetricMatrix.from_dense(stiff), SymmetricMatrix.from_dense(mass)


@lru_cache(maxsize=None)
def _pencil_eigs(a_value: float, modes: int) -> tuple[tuple[float, ...], float]:
    stiff, mass, deviation = _assemble_dense(a_value, modes)
    limit = modes**2 // 2
    vals = sym_gen_eigs(stiff, mass, limit)
    return tuple(vals), deviation


def ritz_eigs(spec: RitzBasisSpec, count: int) -> RitzSolution:
    """Smallest `count` pencil eigenvalues; upper bounds for the clamped plate."""
    if not 1 <= count <= spec.max_count:
        raise ValueError(f"count must be in [1, {spec.max_count}] for M={spec.modes_per_direction}")
    vals, deviation = _pencil_eigs(spec.a.a, spec.modes_per_direction)
    return RitzSolution(
        spec=spec,
        eigenvalues=vals[:count],
        count=count,
        gram_deviation=deviation,
    )


def lambda1_curve(
    grid: Sequence[RectAspect | float],
    modes: int = 12,
) -> list[tuple[float, float]]:
    """Upper-bound curve a -> lambda_1(a) over an aspect grid in [1, 2]."""
    aspects = [x if isinstance(x, RectAspect) else RectAspect(float(x)) for x in grid]
    if any(asp.a > 2.0 for asp in aspects):
        raise ValueError("curve grid must stay within [1, 2]")

    def first_value(asp: RectAspect) -> float:
        return ritz_eigs(RitzBasisSpec(a=asp, modes_per_direction=modes), 1).eigenvalues[0]

    return [(asp.a, val) for asp, val in zip(aspects, parallel_map(first_value, aspects))]
