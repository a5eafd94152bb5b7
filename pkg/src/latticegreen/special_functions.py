"""Modified Bessel functions I_n and the quadrature helpers used by oracles.

The cyclic exponential sums of the nearest-neighbor chain expand in modified
Bessel functions of integer order, and the chain propagator is their Laplace
transform,

    integral_0^inf exp(-p z) I_n(z) dz = exp(-|n| v) / sinh v,   p = cosh v > 1.

Everything here is elementary and self-contained: an ascending power series
for small arguments, a Miller-style backward recurrence for large ones, a
trapezoid rule with an explicit cutoff, and a periodic-rectangle Fourier
coefficient used as an independent cross-check of the series evaluators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonConvergence

__all__ = [
    "SeriesTolerance",
    "QuadratureSpec",
    "bessel_i",
    "bessel_i_grid",
    "fourier_coefficient_oracle",
    "laplace_identity_check",
]

_MAX_ORDER = 10**6


@dataclass(frozen=True)
class SeriesTolerance:
    """Truncation control for every series in the package.

    A series is stopped once the last term's magnitude drops below
    ``abs_tol`` times the accumulated magnitude (sum of term magnitudes),
    which makes every truncated result reproducible.
    """

    abs_tol: float = 1e-15
    max_terms: int = 10000

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")


@dataclass(frozen=True)
class QuadratureSpec:
    """Composite-trapezoid settings for semi-infinite Laplace integrals."""

    upper_cutoff: float
    step_count: int

    def __post_init__(self) -> None:
        if not self.upper_cutoff > 0.0:
            raise DomainError(f"upper_cutoff must be positive, got {self.upper_cutoff}")
        if self.step_count < 2:
            raise DomainError(f"step_count must be >= 2, got {self.step_count}")


def _bessel_i_series(n: int, z: complex, tol: SeriesTolerance) -> complex:
    """Ascending power series I_n(z) = sum_k (z/2)^(n+2k) / (k! (n+k)!), n >= 0."""
    if n and n * math.log(abs(z) / 2.0) - math.lgamma(n + 1) < -745.0:
        return 0.0 + 0.0j  # below double-precision underflow threshold
    # Leading term in log space; (z/2)^n via n*log keeps integer-power phase exact.
    term = cmath.exp(n * cmath.log(z / 2.0) - math.lgamma(n + 1)) if n else 1.0 + 0.0j
    acc = term
    acc_mag = abs(term)
    q = z * z / 4.0
    for k in range(1, tol.max_terms + 1):
        term = term * q / (k * (n + k))
        acc += term
        acc_mag += abs(term)
        if abs(term) < tol.abs_tol * acc_mag:
            return acc
    raise NonConvergence(
        f"I_{n}({z}): power series did not meet the tail bound in {tol.max_terms} terms"
    )


def _bessel_i_miller(n: int, z: complex, tol: SeriesTolerance) -> complex:
    """Backward (Miller) recurrence normalized by e^z = I_0 + 2 sum_k I_k.

    The downward recurrence I_{k-1} = I_{k+1} + (2k/z) I_k is stable;
    the start order grows until the result is insensitive to it.
    """
    za = abs(z)
    base = max(n, int(za)) + 20
    prev = None
    steps_used = 0
    while steps_used <= tol.max_terms:
        result = _miller_pass(n, z, base)
        steps_used += base
        if prev is not None and abs(result - prev) <= 10.0 * tol.abs_tol * max(abs(result), 1e-300):
            return result
        prev = result
        base += 24
    raise NonConvergence(
        f"I_{n}({z}): Miller recurrence start order exceeded max_terms={tol.max_terms}"
    )


def _miller_pass(n: int, z: complex, start: int) -> complex:
    high = 0.0 + 0.0j
    cur = 1e-280 + 0.0j
    norm = 0.0 + 0.0j
    target = 0.0 + 0.0j
    for k in range(start, 0, -1):
        low = high + (2.0 * k / z) * cur
        high, cur = cur, low
        if k - 1 == n:
            target = cur
        if k - 1 >= 1:
            norm += cur  # accumulates I_1 + I_2 + ... (unnormalized)
        if abs(cur) > 1e250:
            scale = 1e-250
            high *= scale
            cur *= scale
            norm *= scale
            target *= scale
    norm = cur + 2.0 * norm  # I_0 + 2 sum_{k>=1} I_k = e^z
    if n == 0:
        target = cur
    return target * cmath.exp(z) / norm


def bessel_i(n: int, z: complex, tol: SeriesTolerance | None = None) -> complex:
    """Modified Bessel function I_n(z) for integer order and complex argument.

    Uses the ascending power series for |z| <= 2(|n|+1) and the Miller
    backward recurrence above that; I_{-n}(z) = I_n(z) holds by construction,
    and Re z < 0 is mapped to the right half-plane via I_n(-z) = (-1)^n I_n(z).

    Raises
    ------
    NonConvergence
        If the term budget is exhausted before the tail bound is met.
    """
    if tol is None:
        tol = SeriesTolerance()
    n = abs(int(n))
    if n > _MAX_ORDER:
        raise DomainError(f"order |n| = {n} exceeds supported bound {_MAX_ORDER}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z}")
    if z == 0:
        return 1.0 + 0.0j if n == 0 else 0.0 + 0.0j
    sign = 1.0
    if z.real < 0.0:
        z = -z
        sign = -1.0 if n % 2 else 1.0
    if abs(z) <= 2.0 * (n + 1):
        return sign * _bessel_i_series(n, z, tol)
    return sign * _bessel_i_miller(n, z, tol)


def bessel_i_grid(n: int, x: np.ndarray, abs_tol: float = 1e-16) -> np.ndarray:
    """Vectorized I_n on a grid of real x >= 0.

    For real nonnegative argument every series term is positive, so the
    ascending series is stable at any size that fits in double precision
    (|x| up to ~700); this is what the quadrature oracles integrate.
    """
    n = abs(int(n))
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise DomainError("bessel_i_grid expects x >= 0")
    half = x / 2.0
    with np.errstate(divide="ignore"):
        log_lead = n * np.log(np.where(half > 0.0, half, 1.0)) - math.lgamma(n + 1)
    term = np.where(half > 0.0, np.exp(log_lead), 1.0 if n == 0 else 0.0)
    acc = term.copy()
    q = half * half
    for k in range(1, 1000):
        term = term * q / (k * (n + k))
        acc += term
        if np.all(term <= abs_tol * acc):
            return acc
    raise NonConvergence(f"bessel_i_grid(n={n}): series stalled (max x = {x.max()})")


def fourier_coefficient_oracle(
    f: Callable[[np.ndarray], np.ndarray], n: int, samples: int
) -> complex:
    """Fourier coefficient c_n = (1/2pi) integral_0^2pi f(y) e^{-iny} dy.

    Periodic rectangle (= trapezoid) rule on ``samples`` points, which is
    spectrally accurate for smooth periodic f.  The caller controls the
    resolution; samples >= 4|n| + 16 is a sensible floor.
    """
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    y = 2.0 * np.pi * np.arange(samples) / samples
    vals = np.asarray(f(y), dtype=complex)
    return complex(np.sum(vals * np.exp(-1j * n * y)) / samples)


def laplace_identity_check(
    n: int, p: float, quad: QuadratureSpec
) -> tuple[float, float]:
    """Compare quadrature and closed form of the Laplace transform of I_n.

    Returns ``(numeric, closed)`` with

        numeric = trapezoid of integral_0^cutoff exp(-p z) I_n(z) dz,
        closed  = exp(-|n| v) / sinh v,   v = arccosh(p),

    for real p > 1 (the transform converges for Re p > 1).
    """
    if p <= 1.0:
        raise DomainError(f"Laplace identity requires p > 1, got p = {p}")
    v = math.acosh(p)
    closed = math.exp(-abs(int(n)) * v) / math.sinh(v)

    z = np.linspace(0.0, quad.upper_cutoff, quad.step_count + 1)
    integrand = np.exp(-p * z) * bessel_i_grid(n, z)
    numeric = float(np.trapezoid(integrand, z))
    return numeric, closed
