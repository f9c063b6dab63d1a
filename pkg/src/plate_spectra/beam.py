"""One-dimensional clamped-beam spectral problems.

Covers the roots omega_j of cos(w)cosh(w) = 1, the associated clamped-beam
eigenfunctions

    X_j(t) = cosh(w t) - cos(w t) - beta_j (sinh(w t) - sin(w t)),
    beta_j = (cosh w - cos w) / (sinh w - sin w),

and the first eigenvalue rho(alpha) of the tension-perturbed clamped beam

    y'''' - 2 alpha y'' = lambda y  on (0, 1),   y = y' = 0 at both ends,

solved two independent ways: a characteristic-determinant root (primary)
and a second-order finite-difference discretization (oracle).

With p = sqrt(alpha + s), q = sqrt(s - alpha), s = sqrt(alpha^2 + lambda),
the general solution A cosh(px) + B sinh(px) + C cos(qx) + D sin(qx) meets
the four clamped conditions iff

    D(lambda; alpha) = 2 p q (1 - cosh p cos q) + (p^2 - q^2) sinh p sin q = 0.

Using p q = sqrt(lambda) and p^2 - q^2 = 2 alpha, and dividing by cosh p to
keep every factor bounded, the implementation evaluates

    2 sqrt(lambda) (sech p - cos q) + 2 alpha tanh p sin q,

which at alpha = 0 reduces to cos q cosh q = 1 (p = q = lambda^(1/4)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    BracketFailureError,
    GridTooCoarseError,
    IndexOutOfRangeError,
)
from .numerics import DEFAULT_ROOT_TOL, Interval, bisect_root, gauss_legendre

MAX_MODE_INDEX = 64

DETERMINANT = "determinant"
FINITE_DIFFERENCE = "finite-difference"

# First sign change is searched in steps well below the gap between the two
# lowest eigenvalues (>= ~3300 at alpha = 0, growing with alpha), so the scan
# cannot jump over a root pair.
_SCAN_STEP = 1500.0


def _sech(x: float) -> float:
    # 1/cosh without overflow for large x.
    e = math.exp(-abs(x))
    return 2.0 * e / (1.0 + e * e)


def beam_frequency(j: int) -> float:
    """The j-th positive root of cos(w) cosh(w) = 1.

    Bisection runs on the equivalent, well-conditioned form
    cos(w) - sech(w) = 0; the raw product cos(w)cosh(w) is exponentially
    ill-conditioned in w and cannot certify residuals for large j in
    double precision.
    """
    if not 1 <= j <= MAX_MODE_INDEX:
        raise IndexOutOfRangeError(f"mode index must be in [1, {MAX_MODE_INDEX}], got {j}")
    return _beam_frequency_cached(j)


@lru_cache(maxsize=None)
def _beam_frequency_cached(j: int) -> float:
    center = (j + 0.5) * math.pi

    def f(w: float) -> float:
        return math.cos(w) - _sech(w)

    enclosure = bisect_root(f, Interval(center - 0.4, center + 0.4), tol=1e-13)
    return enclosure.midpoint()


@dataclass(frozen=True)
class BeamMode:
    """A clamped-beam eigenfunction on [0, 1], L2-normalized.

    The textbook expression suffers catastrophic cancellation near t = 1
    (cosh and beta*sinh agree to ~e^(-w) relative).  Evaluation therefore
    regroups exactly into exponentials,

        X(t) = c1 e^(wt) + c2 e^(-wt) - cos(wt) + beta sin(wt),
        c1 = (1 - beta)/2,  c2 = (1 + beta)/2,

    with c1 computed cancellation-free as
    (cos w - sin w - e^(-w)) / (2 (sinh w - sin w)).
    """

    index: int
    frequency: float
    beta: float
    norm: float

    def _coeffs(self) -> tuple[float, float]:
        w = self.frequency
        c1 = (math.cos(w) - math.sin(w) - math.exp(-w)) / (2.0 * (math.sinh(w) - math.sin(w)))
        c2 = 0.5 * (1.0 + self.beta)
        return c1, c2

    def value(self, t):
        """X_j(t); accepts scalars or arrays."""
        w, b = self.frequency, self.beta
        c1, c2 = self._coeffs()
        z = w * np.asarray(t, dtype=float)
        out = c1 * np.exp(z) + c2 * np.exp(-z) - np.cos(z) + b * np.sin(z)
        return out / self.norm

    def d1(self, t):
        """X_j'(t)."""
        w, b = self.frequency, self.beta
        c1, c2 = self._coeffs()
        z = w * np.asarray(t, dtype=float)
        out = w * (c1 * np.exp(z) - c2 * np.exp(-z) + np.sin(z) + b * np.cos(z))
        return out / self.norm

    def d2(self, t):
        """X_j''(t)."""
        w, b = self.frequency, self.beta
        c1, c2 = self._coeffs()
        z = w * np.asarray(t, dtype=float)
        out = w * w * (c1 * np.exp(z) + c2 * np.exp(-z) + np.cos(z) - b * np.sin(z))
        return out / self.norm


def beam_mode(j: int) -> BeamMode:
    """The j-th clamped-beam mode, normalized so that int_0^1 X_j^2 = 1."""
    if not 1 <= j <= MAX_MODE_INDEX:
        raise IndexOutOfRangeError(f"mode index must be in [1, {MAX_MODE_INDEX}], got {j}")
    return _beam_mode_cached(j)


@lru_cache(maxsize=None)
def _beam_mode_cached(j: int) -> BeamMode:
    w = beam_frequency(j)
    beta = (math.cosh(w) - math.cos(w)) / (math.sinh(w) - math.sin(w))
    raw = BeamMode(index=j, frequency=w, beta=beta, norm=1.0)
    rule = mode_quadrature(j)
    x, wts = rule.mapped_to(0.0, 1.0)
    norm = math.sqrt(float(wts @ raw.value(x) ** 2))
    return BeamMode(index=j, frequency=w, beta=beta, norm=norm)


def mode_quadrature(j: int):
    """A Gauss-Legendre rule resolving products of modes up to index j."""
    w = (j + 0.5) * math.pi
    return gauss_legendre(min(256, max(48, int(w) + 48)))


@lru_cache(maxsize=1)
def _first_mode_tension_integral() -> float:
    # K1 = int_0^1 (X_1')^2, the tension energy of the unperturbed mode.
    mode = beam_mode(1)
    x, wts = mode_quadrature(1).mapped_to(0.0, 1.0)
    return float(wts @ mode.d1(x) ** 2)


@dataclass(frozen=True)
class RhoResult:
    """First eigenvalue of the tension-perturbed clamped beam."""

    alpha: float
    rho: float
    enclosure: Interval
    method: str
    residual: float


def characteristic(lam: float, alpha: float) -> float:
    """Scaled clamped-boundary determinant; zero exactly at eigenvalues."""
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    s = math.sqrt(alpha * alpha + lam)
    p = math.sqrt(s + alpha)
    q = math.sqrt(max(s - alpha, 0.0))
    return 2.0 * math.sqrt(lam) * (_sech(p) - math.cos(q)) + 2.0 * alpha * math.tanh(p) * math.sin(q)


def rho_determinant(alpha: float, tol: float = DEFAULT_ROOT_TOL) -> RhoResult:
    """First eigenvalue rho(alpha) via the characteristic determinant.

    The root is bracketed inside [w1^4, w1^4 + 2 alpha K1 + 1]: the floor is
    rho(0) (monotonicity), the ceiling the Rayleigh quotient of the
    unperturbed first mode.  The first sign change of the determinant is
    located by a coarse forward scan before bisection, so a later eigenvalue
    inside the Rayleigh window can never be picked up by mistake.
    """
    if alpha < 0.0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    w14 = beam_frequency(1) ** 4
    lo = 0.999 * w14
    hi = w14 + 2.0 * alpha * _first_mode_tension_integral() + 1.0

    def f(lam: float) -> float:
        return characteristic(lam, alpha)

    segment = _first_sign_change(f, lo, hi)
    if segment is None:
        span = hi - lo
        for _ in range(16):
            lo2, hi2 = hi, hi + span
            span *= 2.0
            segment = _first_sign_change(f, lo2, hi2)
            hi = hi2
            if segment is not None:
                break
        else:
            raise BracketFailureError(
                f"no sign change of the characteristic function for alpha={alpha}"
            )

    enclosure = bisect_root(f, segment, tol=tol)
    rho = enclosure.midpoint()
    return RhoResult(
        alpha=alpha,
        rho=rho,
        enclosure=enclosure,
        method=DETERMINANT,
        residual=abs(f(rho)),
    )


def _first_sign_change(f, lo: float, hi: float) -> Interval | None:
    count = max(1, int(math.ceil((hi - lo) / _SCAN_STEP)))
    xs = np.linspace(lo, hi, count + 1)
    prev_x, prev_f = float(xs[0]), f(float(xs[0]))
    for x in xs[1:]:
        cur_x, cur_f = float(x), f(float(x))
        if prev_f == 0.0:
            return Interval(prev_x, prev_x)
        if prev_f * cur_f < 0.0:
            return Interval(prev_x, cur_x)
        prev_x, prev_f = cur_x, cur_f
    return None


def _fd_matrix(alpha: float, gridpoints: int) -> np.ndarray:
    """Dense FD matrix for y'''' - 2 alpha y'' with clamped ends.

    Interior nodes x_i = i h, i = 1..n, h = 1/(n+1).  y(0) = y(1) = 0 drop
    the boundary values; y'(0) = y'(1) = 0 are imposed by ghost reflection
    (y_{-1} = y_1, y_{n+2} = y_n), which turns the corner entries of the
    5-point bilaplacian stencil into 7/h^4.
    """
    n = gridpoints
    h = 1.0 / (n + 1)
    main4 = np.full(n, 6.0)
    main4[0] = main4[-1] = 7.0
    d4 = (
        np.diag(main4)
        + np.diag(np.full(n - 1, -4.0), 1)
        + np.diag(np.full(n - 1, -4.0), -1)
        + np.diag(np.full(n - 2, 1.0), 2)
        + np.diag(np.full(n - 2, 1.0), -2)
    ) / h**4
    d2 = (
        np.diag(np.full(n, -2.0))
        + np.diag(np.full(n - 1, 1.0), 1)
        + np.diag(np.full(n - 1, 1.0), -1)
    ) / h**2
    return d4 - 2.0 * alpha * d2


def _fd_smallest(alpha: float, gridpoints: int) -> tuple[float, np.ndarray]:
    matrix = _fd_matrix(alpha, gridpoints)
    vals, vecs = np.linalg.eigh(matrix)
    return float(vals[0]), vecs[:, 0]


def rho_fd_oracle(alpha: float, gridpoints: int) -> RhoResult:
    """Independent check on rho(alpha) by second-order finite differences.

    The enclosure half-width is 1.5 * C * h^2 with C estimated by Richardson
    comparison against the half-resolution grid; convergence is O(h^2).
    """
    if alpha < 0.0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if gridpoints < 32:
        raise GridTooCoarseError(f"need at least 32 grid points, got {gridpoints}")

    value_f, vec = _fd_smallest(alpha, gridpoints)
    coarse = gridpoints // 2
    value_c, _ = _fd_smallest(alpha, coarse)

    h_f = 1.0 / (gridpoints + 1)
    h_c = 1.0 / (coarse + 1)
    c_est = (value_c - value_f) / (h_c**2 - h_f**2)
    half_width = 1.5 * abs(c_est) * h_f**2

    matrix = _fd_matrix(alpha, gridpoints)
    residual = float(np.linalg.norm(matrix @ vec - value_f * vec))
    return RhoResult(
        alpha=alpha,
        rho=value_f,
        enclosure=Interval(value_f - half_width, value_f + half_width),
        method=FINITE_DIFFERENCE,
        residual=residual,
    )


def rho_richardson(alpha: float, gridpoints: int) -> float:
    """h^2-extrapolated FD value from grids `gridpoints` and half of it."""
    fine = rho_fd_oracle(alpha, gridpoints)
    value_c, _ = _fd_smallest(alpha, gridpoints // 2)
    h_f = 1.0 / (gridpoints + 1)
    h_c = 1.0 / (gridpoints // 2 + 1)
    return fine.rho + (fine.rho - value_c) * h_f**2 / (h_c**2 - h_f**2)


def rho_derivative_check(t: float, gridpoints: int = 512) -> tuple[float, float]:
    """Both sides of the derivative identity d/dt rho(pi^2 t) = 2 pi^2 K(t).

    Returns (central finite difference of rho(pi^2 t) in t,
    2 pi^2 int_0^1 (v_t')^2) where v_t is the L2-normalized FD ground state.
    Used as a property check only.
    """
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    pi2 = math.pi**2
    delta = 1e-3 * max(1.0, t)
    if delta >= t:
        delta = 0.5 * t
    hi = rho_determinant(pi2 * (t + delta), tol=1e-12).rho
    lo = rho_determinant(pi2 * (t - delta), tol=1e-12).rho
    central = (hi - lo) / (2.0 * delta)

    _, vec = _fd_smallest(pi2 * t, gridpoints)
    h = 1.0 / (gridpoints + 1)
    vec = vec / math.sqrt(h * float(vec @ vec))
    diffs = np.diff(vec, prepend=0.0, append=0.0)
    tension = float(diffs @ diffs) / h
    return central, 2.0 * pi2 * tension
