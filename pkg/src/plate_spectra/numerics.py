"""Shared numerical kernels: certified bisection, Gauss-Legendre quadrature,
dense symmetric (generalized) eigensolvers, and a closed-interval type.

All routines are pure and operate on value types, so they are safe to call
from multiple threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoSignChangeError,
    NonFiniteError,
    NotPositiveDefiniteError,
    OrderOutOfRangeError,
)

DEFAULT_ROOT_TOL = 1e-10

MAX_QUADRATURE_ORDER = 256


@dataclass(frozen=True)
class Interval:
    """Closed floating interval [lo, hi] used for certified enclosures."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise NonFiniteError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"interval requires lo <= hi, got [{self.lo}, {self.hi}]")

    def width(self) -> float:
        return self.hi - self.lo

    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on (-1, 1), exact to degree 2*order - 1."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise OrderOutOfRangeError(f"order must be >= 1, got {self.order}")
        if len(self.nodes) != self.order or len(self.weights) != self.order:
            raise DimensionMismatchError("nodes/weights length must equal order")

    def integrate(self, f: Callable[[np.ndarray], np.ndarray], lo: float = -1.0, hi: float = 1.0) -> float:
        """Integrate a vectorized callable over [lo, hi]."""
        x, w = self.mapped_to(lo, hi)
        return float(w @ np.asarray(f(x), dtype=float))

    def mapped_to(self, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights affinely mapped from (-1, 1) to (lo, hi)."""
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        return mid + half * self.nodes, half * self.weights


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense symmetric matrix storing only the upper triangle (row-major)."""

    n: int
    packed: np.ndarray

    def __post_init__(self) -> None:
        expected = self.n * (self.n + 1) // 2
        if len(self.packed) != expected:
            raise DimensionMismatchError(
                f"packed length {len(self.packed)} does not match dimension {self.n}"
            )

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "SymmetricMatrix":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        iu = np.triu_indices(n)
        return cls(n=n, packed=a[iu].copy())

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        iu = np.triu_indices(self.n)
        a[iu] = self.packed
        il = np.tril_indices(self.n, k=-1)
        a[il] = a.T[il]
        return a


def bisect_root(f: Callable[[float], float], bracket: Interval, tol: float = DEFAULT_ROOT_TOL) -> Interval:
    """Bisect f on a sign-changing bracket down to an interval of width <= tol.

    The returned interval is certified: f changes sign (non-strictly) across
    it, so it contains a root of any continuous f.  Plain bisection is used
    rather than a faster hybrid because the deliverable is the enclosure, not
    a point estimate.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo), f(hi)
    for x, fx in ((lo, flo), (hi, fhi)):
        if not math.isfinite(fx):
            raise NonFiniteError(f"f({x}) = {fx} is not finite")
    if flo == 0.0:
        return Interval(lo, min(hi, lo + tol))
    if fhi == 0.0:
        return Interval(max(lo, hi - tol), hi)
    if flo * fhi > 0.0:
        raise NoSignChangeError(
            f"f has the same sign at both endpoints: f({lo}) = {flo}, f({hi}) = {fhi}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # hit floating resolution
        fmid = f(mid)
        if not math.isfinite(fmid):
            raise NonFiniteError(f"f({mid}) = {fmid} is not finite")
        if fmid == 0.0:
            # Zero at the midpoint: shrink symmetrically around it.
            half = 0.5 * tol
            return Interval(max(lo, mid - half), min(hi, mid + half))
        if flo * fmid < 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return Interval(lo, hi)


def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule of the given order on (-1, 1).

    Nodes and weights come from the Golub-Welsch eigenvalue method with a
    Newton polish (numpy's leggauss); accurate to ~1e-15 for the supported
    orders.
    """
    if not 1 <= order <= MAX_QUADRATURE_ORDER:
        raise OrderOutOfRangeError(f"order must be in [1, {MAX_QUADRATURE_ORDER}], got {order}")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)


def _as_dense(a: SymmetricMatrix | np.ndarray) -> np.ndarray:
    if isinstance(a, SymmetricMatrix):
        return a.to_dense()
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    return 0.5 * (a + a.T)


def sym_eigs(a: SymmetricMatrix | np.ndarray, count: int) -> list[float]:
    """The `count` smallest eigenvalues of a symmetric matrix, ascending.

    Backed by LAPACK's dense symmetric solver (numpy.linalg.eigh), which
    keeps residuals orders of magnitude below the 1e-9 * ||A|| contract at
    the dimensions used here (n <= ~1600).
    """
    dense = _as_dense(a)
    n = dense.shape[0]
    if not 1 <= count <= n:
        raise DimensionMismatchError(f"count must be in [1, {n}], got {count}")
    vals = np.linalg.eigvalsh(dense)
    return [float(v) for v in vals[:count]]


def sym_gen_eigs(
    a: SymmetricMatrix | np.ndarray,
    b: SymmetricMatrix | np.ndarray,
    count: int,
) -> list[float]:
    """Smallest `count` eigenvalues of the pencil A x = lambda B x, ascending.

    B must be symmetric positive definite; it is reduced by Cholesky
    (B = L L^T, then C = L^-1 A L^-T) and the problem handed to sym_eigs.
    """
    da, db = _as_dense(a), _as_dense(b)
    if da.shape != db.shape:
        raise DimensionMismatchError(f"dimension mismatch: {da.shape} vs {db.shape}")
    try:
        chol = np.linalg.cholesky(db)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(f"mass matrix is not positive definite: {exc}") from exc
    half = np.linalg.solve(chol, da)
    reduced = np.linalg.solve(chol, half.T).T
    return sym_eigs(0.5 * (reduced + reduced.T), count)


def log_grid(lo: float, hi: float, count: int, positive_floor: float | None = None) -> list[float]:
    """Log-spaced sample points on [lo, hi]; lo may be 0 (kept as the first point).

    When lo is 0 the geometric part starts at positive_floor (default
    hi * 1e-6), so neighboring points stay resolvable by tolerance-limited
    solvers.
    """
    if count < 2 or hi <= lo:
        raise ValueError("need count >= 2 and hi > lo")
    if lo > 0.0:
        return [float(x) for x in np.geomspace(lo, hi, count)]
    floor = positive_floor if positive_floor is not None else hi * 1e-6
    tail = np.geomspace(floor, hi, count - 1)
    return [0.0] + [float(x) for x in tail]


def strictly_increasing(values: Sequence[float]) -> bool:
    return all(b > a for a, b in zip(values, values[1:]))
