"""Complete elliptic integrals via the arithmetic-geometric mean.

The modulus convention is used throughout:

    K(m) = integral 0..pi/2 of (1 - m^2 sin^2 t)^(-1/2) dt
    E(m) = integral 0..pi/2 of sqrt(1 - m^2 sin^2 t) dt

The AGM iteration converges quadratically, so both integrals reach machine
precision in fewer than ten rounds for any m < 1.  E comes from the standard
companion sum over the squared AGM differences.  ``e2`` is the sin^2-weighted
second-kind integral that appears when the intersection-volume integrands are
reduced, and ``series_E`` / ``series_K`` are truncated Maclaurin sums used as
an independent evaluation route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "ConvergenceError",
    "Modulus",
    "AgmConfig",
    "DEFAULT_AGM",
    "complete_K",
    "complete_E",
    "complete_ke",
    "e2",
    "series_coefficient",
    "series_E",
    "series_K",
]


class DomainError(ValueError):
    """Argument outside the mathematical domain of the requested quantity."""


class ConvergenceError(RuntimeError):
    """The AGM iteration failed to reach tolerance within the iteration cap."""


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus, constrained to [0, 1]."""

    value: float

    def __post_init__(self) -> None:
        v = self.value
        if math.isnan(v) or not 0.0 <= v <= 1.0:
            raise DomainError(f"modulus must lie in [0, 1], got {v!r}")


@dataclass(frozen=True)
class AgmConfig:
    """Convergence knobs for the AGM iteration."""

    tolerance: float = 1e-15
    max_iterations: int = 40

    def __post_init__(self) -> None:
        if not self.tolerance > 0.0:
            raise DomainError("AGM tolerance must be positive")
        if self.max_iterations < 1:
            raise DomainError("AGM max_iterations must be at least 1")


DEFAULT_AGM = AgmConfig()


def _modulus_value(m) -> float:
    v = m.value if isinstance(m, Modulus) else float(m)
    if math.isnan(v) or not 0.0 <= v <= 1.0:
        raise DomainError(f"modulus must lie in [0, 1], got {v!r}")
    return v


def complete_ke(m, cfg: AgmConfig = DEFAULT_AGM):
    """Vectorized K(m) and E(m) over an array of moduli in [0, 1].

    Entries equal to 1 yield E = 1 and K = +inf; the scalar ``complete_K``
    raises on that pole instead, so batch callers must mask it themselves.

    Returns a pair of arrays shaped like ``m``.
    """
    mv = np.asarray(m, dtype=float)
    if np.any(np.isnan(mv)) or np.any((mv < 0.0) | (mv > 1.0)):
        raise DomainError("all moduli must lie in [0, 1]")
    pole = mv == 1.0
    a = np.ones_like(mv)
    # complement sqrt(1 - m^2) without cancellation near m = 1
    b = np.sqrt((1.0 - mv) * (1.0 + mv))
    # companion sum of 2^(n-1) c_n^2, seeded with the n = 0 term c_0 = m;
    # pole lanes are frozen at a = b so they stop contributing
    a = np.where(pole, 1.0, a)
    b = np.where(pole, 1.0, b)
    csum = 0.5 * mv * mv
    pw = 0.5
    converged = False
    for _ in range(cfg.max_iterations):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), np.sqrt(a * b)
        pw *= 2.0
        csum = csum + pw * c * c
        if float(np.max(c, initial=0.0)) <= cfg.tolerance:
            converged = True
            break
    if not converged:
        raise ConvergenceError(
            f"AGM did not reach {cfg.tolerance:g} in {cfg.max_iterations} iterations"
        )
    kk = np.pi / (2.0 * a)
    ee = kk * (1.0 - csum)
    kk = np.where(pole, np.inf, kk)
    ee = np.where(pole, 1.0, ee)
    return kk, ee


def complete_K(m, cfg: AgmConfig = DEFAULT_AGM) -> float:
    """Complete elliptic integral of the first kind, modulus m < 1."""
    v = _modulus_value(m)
    if v == 1.0:
        raise DomainError("K(m) diverges logarithmically at m = 1")
    kk, _ = complete_ke(v, cfg)
    return float(kk)


def complete_E(m, cfg: AgmConfig = DEFAULT_AGM) -> float:
    """Complete elliptic integral of the second kind; E(1) = 1 exactly."""
    v = _modulus_value(m)
    if v == 1.0:
        return 1.0
    _, ee = complete_ke(v, cfg)
    return float(ee)


# Below this threshold the E/K combination for e2 divides near-cancelling
# quantities by 3 m^2 and loses digits; the direct expansion takes over.
E2_SMALL_MODULUS = 1e-3


def _e2_series(v: float) -> float:
    # term-wise integration of the binomial expansion of the square root;
    # the term ratio t_{j}/t_{j-1} is m^2 (2j-3)(2j+1) / (2j (2j+2))
    m2 = v * v
    term = 0.25 * math.pi
    total = term
    for j in range(1, 9):
        term *= m2 * (2 * j - 3) * (2 * j + 1) / ((2 * j) * (2 * j + 2))
        total += term
    return total


def e2(m, cfg: AgmConfig = DEFAULT_AGM) -> float:
    """The sin^2-weighted second-kind integral.

    e2(m) = integral 0..pi/2 of sin^2(t) sqrt(1 - m^2 sin^2 t) dt, evaluated
    through the reduction

        e2(m) = (2m^2 - 1)/(3m^2) E(m) + (1 - m^2)/(3m^2) K(m)

    for m above ``E2_SMALL_MODULUS`` and by the direct Maclaurin expansion
    below it.  At m = 1 the K weight vanishes and the value is E(1)/3 = 1/3.
    """
    v = _modulus_value(m)
    if v < E2_SMALL_MODULUS:
        return _e2_series(v)
    m2 = v * v
    comp = (1.0 - v) * (1.0 + v)
    out = (2.0 * m2 - 1.0) / (3.0 * m2) * complete_E(v, cfg)
    weight_k = comp / (3.0 * m2)
    if weight_k != 0.0:
        out += weight_k * complete_K(v, cfg)
    return out


def series_coefficient(n: int) -> float:
    """Squared normalized central binomial coefficient c_n = ((2n)! / (2^2n n!^2))^2.

    Computed by the recurrence c_{n+1} = c_n (2n+1)^2 / (2n+2)^2, which
    reproduces the factorial definition exactly in floating point for
    moderate n.
    """
    if n < 0:
        raise DomainError("series index must be nonnegative")
    c = 1.0
    for j in range(int(n)):
        c = c * (2 * j + 1) ** 2 / (2 * j + 2) ** 2
    return c


def _validate_series_args(m, n_terms: int) -> float:
    v = _modulus_value(m)
    if v >= 1.0:
        raise DomainError("the Maclaurin series requires modulus < 1")
    if n_terms < 1:
        raise DomainError("n_terms must be at least 1")
    return v


def series_K(m, n_terms: int) -> float:
    """n_terms-term truncation of K(m) = (pi/2) sum c_n m^(2n)."""
    v = _validate_series_args(m, n_terms)
    m2 = v * v
    c = 1.0
    x = 1.0
    total = 1.0
    for n in range(1, n_terms):
        c = c * (2 * n - 1) ** 2 / (2 * n) ** 2
        x *= m2
        total += c * x
    return 0.5 * math.pi * total


def series_E(m, n_terms: int) -> float:
    """n_terms-term truncation of E(m) = (pi/2) sum c_n m^(2n) / (1 - 2n)."""
    v = _validate_series_args(m, n_terms)
    m2 = v * v
    c = 1.0
    x = 1.0
    total = 1.0
    for n in range(1, n_terms):
        c = c * (2 * n - 1) ** 2 / (2 * n) ** 2
        x *= m2
        total += c * x / (1 - 2 * n)
    return 0.5 * math.pi * total
