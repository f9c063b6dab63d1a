"""Exact spectra on the unit-area rectangle R_a by lattice enumeration,
two-term Weyl comparisons, and high-frequency minimiser scans.

The Dirichlet Laplacian on R_a has eigenvalues pi^2 (m^2/a^2 + n^2 a^2) over
integer pairs m, n >= 1; the hinged-plate (Navier) eigenvalues are exactly
their squares, in the same order.  Both serve as computable surrogates and
certified floors for the clamped plate, whose spectrum has no closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .bounds import RectAspect
from .errors import EmptyGridError, NonPositiveError, SpectrumSizeError
from .parallel import parallel_map

DIRICHLET_LAPLACIAN = "dirichlet-laplacian"
NAVIER = "navier"
CLAMPED_RITZ = "clamped-ritz"

MAX_SPECTRUM_SIZE = 10**8
MAX_SPECTRUM_ASPECT = 50.0

# 1 + Gamma(3/4) / (sqrt(pi) Gamma(5/4)); frozen at 12 digits, checked by test.
WEYL_BOUNDARY_FACTOR = 1.76275976350

# 4 sqrt(2 pi) / (3 sqrt(3)), the lattice-remainder coefficient.
LATTICE_REMAINDER_COEFF = 4.0 * math.sqrt(2.0 * math.pi) / (3.0 * math.sqrt(3.0))


@dataclass(frozen=True)
class SpectrumTable:
    """The k smallest exact eigenvalues with their lattice indices.

    Entries are (value, m, n), ascending by value with (m, n)-lexicographic
    tie-breaking, which makes tables byte-reproducible.
    """

    a: RectAspect
    kind: Literal["dirichlet-laplacian", "navier"]
    entries: tuple[tuple[float, int, int], ...]

    @property
    def count(self) -> int:
        return len(self.entries)

    def values(self) -> list[float]:
        return [e[0] for e in self.entries]


@dataclass(frozen=True)
class WeylParams:
    """Geometric data entering the two-term eigenvalue asymptotics."""

    area: float
    perimeter: float
    boundary_factor: float = WEYL_BOUNDARY_FACTOR

    @classmethod
    def for_rectangle(cls, a: RectAspect | float) -> "WeylParams":
        aspect = a if isinstance(a, RectAspect) else RectAspect(a)
        return cls(area=1.0, perimeter=aspect.perimeter)


@dataclass(frozen=True)
class MinimiserScan:
    """Result of an exhaustive grid minimisation of lambda_k(a)."""

    k: int
    kind: str
    grid: tuple[float, ...]
    values: tuple[float, ...]
    a_star: RectAspect
    lambda_star: float

    @property
    def q_star(self) -> float:
        return self.a_star.side_ratio


def _lattice_arrays(a: float, bound: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All (value, m, n) with value = pi^2 (m^2/a^2 + n^2 a^2) <= bound."""
    pi2 = math.pi**2
    budget = bound / pi2
    m_max = int(math.floor(a * math.sqrt(max(budget - a * a, 0.0))))
    if m_max < 1:
        return np.empty(0), np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    m = np.arange(1, m_max + 1, dtype=np.int64)
    rem = budget - (m / a) ** 2
    n_max = np.floor(np.sqrt(np.maximum(rem, 0.0)) / a).astype(np.int64)
    keep = n_max >= 1
    m, n_max = m[keep], n_max[keep]
    if len(m) == 0:
        return np.empty(0), np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    total = int(n_max.sum())
    m_rep = np.repeat(m, n_max)
    offsets = np.repeat(np.cumsum(n_max) - n_max, n_max)
    n_rep = np.arange(total, dtype=np.int64) - offsets + 1
    values = pi2 * ((m_rep / a) ** 2 + (n_rep * a) ** 2)
    return values, m_rep, n_rep


def _enumeration_bound(a: float, k: int) -> float:
    """A cutoff guaranteed (by counting) to capture at least k values."""
    pi2 = math.pi**2
    # Weyl-count seed, then geometric growth until the count is provably >= k.
    bound = 4.0 * math.pi * k + 8.0 * (a + 1.0 / a) * math.sqrt(k + 1.0) + 8.0 * pi2 * (a * a + 1.0)
    while True:
        budget = bound / pi2
        m_max = int(math.floor(a * math.sqrt(max(budget - a * a, 0.0))))
        if m_max >= 1:
            m = np.arange(1, m_max + 1, dtype=np.float64)
            rem = budget - (m / a) ** 2
            count = int(np.floor(np.sqrt(np.maximum(rem, 0.0)) / a).sum())
            if count >= k:
                return bound
        bound *= 2.0


def laplacian_spectrum(a: RectAspect | float, k: int) -> SpectrumTable:
    """The k smallest Dirichlet-Laplacian eigenvalues on R_a, with indices.

    Enumeration is complete: the cutoff grows geometrically until at least k
    lattice values lie below it, so entry k is the k-th smallest over all
    pairs m, n >= 1.
    """
    aspect = a if isinstance(a, RectAspect) else RectAspect(a)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > MAX_SPECTRUM_SIZE:
        raise SpectrumSizeError(f"k = {k} exceeds the supported size {MAX_SPECTRUM_SIZE}")
    if aspect.a > MAX_SPECTRUM_ASPECT:
        raise ValueError(f"aspect must be <= {MAX_SPECTRUM_ASPECT}, got {aspect.a}")
    values, m_rep, n_rep = _lattice_arrays(aspect.a, _enumeration_bound(aspect.a, k))
    order = np.lexsort((n_rep, m_rep, values))[:k]
    entries = tuple(
        (float(values[i]), int(m_rep[i]), int(n_rep[i])) for i in order
    )
    return SpectrumTable(a=aspect, kind=DIRICHLET_LAPLACIAN, entries=entries)


def navier_spectrum(a: RectAspect | float, k: int) -> SpectrumTable:
    """The k smallest Navier (hinged-plate) eigenvalues on R_a.

    Squaring preserves order on positives, so the Laplacian enumeration and
    its tie-breaking carry over verbatim.
    """
    base = laplacian_spectrum(a, k)
    entries = tuple((v * v, m, n) for v, m, n in base.entries)
    return SpectrumTable(a=base.a, kind=NAVIER, entries=entries)


def kth_value(a: RectAspect | float, k: int, kind: str = NAVIER) -> float:
    """The k-th smallest eigenvalue only (no table), for fast grid scans."""
    aspect = a if isinstance(a, RectAspect) else RectAspect(a)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > MAX_SPECTRUM_SIZE:
        raise SpectrumSizeError(f"k = {k} exceeds the supported size {MAX_SPECTRUM_SIZE}")
    values, _, _ = _lattice_arrays(aspect.a, _enumeration_bound(aspect.a, k))
    kth = float(np.partition(values, k - 1)[k - 1])
    if kind == NAVIER:
        return kth * kth
    if kind == DIRICHLET_LAPLACIAN:
        return kth
    raise ValueError(f"unknown spectrum kind: {kind!r}")


def lattice_inequality_sides(a: RectAspect | float, k: int, lambda_k: float) -> tuple[float, float]:
    """Both sides of the lattice-point inequality

        lambda_k^(1/2) >= 4 pi k + 2 a lambda_k^(1/4)
                          - (4 sqrt(2 pi) / (3 sqrt(3))) a^(3/2) lambda_k^(1/8)

    for a clamped-plate eigenvalue (or any valid lower bound for it).
    """
    aspect = a if isinstance(a, RectAspect) else RectAspect(a)
    if lambda_k <= 0.0:
        raise NonPositiveError(f"lambda_k must be positive, got {lambda_k}")
    lhs = math.sqrt(lambda_k)
    rhs = (
        4.0 * math.pi * k
        + 2.0 * aspect.a * lambda_k**0.25
        - LATTICE_REMAINDER_COEFF * aspect.a**1.5 * lambda_k**0.125
    )
    return lhs, rhs


def weyl_two_term(k: int, params: WeylParams) -> tuple[float, float]:
    """Two-term approximations of lambda_k and lambda_k^(1/2).

    Returns (16 pi^2 k^2 / |O|^2 + 16 pi^(3/2) |dO| c k^(3/2) / |O|^(5/2),
             4 pi k / |O| + 2 pi^(1/2) |dO| c k^(1/2) / |O|^(3/2))
    with c the gamma-ratio boundary factor.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    area, perim, c = params.area, params.perimeter, params.boundary_factor
    lam = (
        16.0 * math.pi**2 * k**2 / area**2
        + 16.0 * math.pi**1.5 * perim * c * k**1.5 / area**2.5
    )
    sqrt_lam = (
        4.0 * math.pi * k / area
        + 2.0 * math.sqrt(math.pi) * perim * c * math.sqrt(k) / area**1.5
    )
    return lam, sqrt_lam


def minimiser_scan(
    k: int,
    kind: str,
    grid: Sequence[RectAspect | float],
    ritz_modes: int = 12,
) -> MinimiserScan:
    """Exhaustive minimisation of lambda_k(a) over an aspect grid.

    `kind` picks the spectrum: exact Navier values, or clamped-plate Ritz
    upper bounds with `ritz_modes` beam modes per direction (k <= 50 there;
    the argmin of an upper-bound curve is evidence, not a certificate).
    Ties report the first (smallest) grid point.
    """
    aspects = [x if isinstance(x, RectAspect) else RectAspect(float(x)) for x in grid]
    if not aspects:
        raise EmptyGridError("minimiser scan needs a non-empty grid")
    if kind == NAVIER:
        values = parallel_map(lambda asp: kth_value(asp, k, NAVIER), aspects)
    elif kind == CLAMPED_RITZ:
        if k > 50:
            raise ValueError(f"clamped-ritz scans support k <= 50, got {k}")
        from .ritz import RitzBasisSpec, ritz_eigs

        def clamped_value(asp: RectAspect) -> float:
            spec = RitzBasisSpec(a=asp, modes_per_direction=ritz_modes)
            return ritz_eigs(spec, k).eigenvalues[k - 1]

        values = parallel_map(clamped_value, aspects)
    else:
        raise ValueError(f"unknown scan kind: {kind!r}")

    best = int(np.argmin(values))
    return MinimiserScan(
        k=k,
        kind=kind,
        grid=tuple(asp.a for asp in aspects),
        values=tuple(values),
        a_star=aspects[best],
        lambda_star=values[best],
    )
