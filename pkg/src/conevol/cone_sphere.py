"""Volume shared by an offset unit sphere and an upright cone.

The solid is the set inside the sphere (x + k)^2 + y^2 + z^2 = 1 that also
lies inside the cone z >= cot(alpha) sqrt(x^2 + y^2), with 0 <= k <= 1 and
0 < alpha <= pi/2.  In spherical coordinates the sphere boundary is the
positive root of rho^2 + 2 k rho cos(theta) sin(phi) + k^2 - 1 = 0, and
integrating rho^2 sin(phi), dropping the theta-odd part, and folding theta
onto [0, pi/2] leaves the double integral

    V = int_0^alpha int_0^{pi/2} [ (16/3) k^2 cos^2 t sin^3 p
          + (4/3)(1 - k^2) sin p ] sqrt(1 - k^2 + k^2 cos^2 t sin^2 p) dt dp.

The theta integral is elliptic in the phi-dependent composite modulus
mu(phi) = k sin(phi) / sqrt(1 - k^2 cos^2 phi), which collapses V to one
dimension:

    V = (4/9) int_0^alpha (8 k^2 sin^3 p + 7 (1-k^2) sin p)
            sqrt(1 - k^2 cos^2 p) E(mu) dp
      - (16/9) (1 - k^2) int_0^alpha sin p sqrt(1 - k^2 cos^2 p) K(mu) dp.

Expanding E and K as Maclaurin series in mu and integrating term by term
gives the series route with terms

    T_n = (2 pi / 9) (c_n k^{2n} / (1 - 2n)) int_0^alpha
            [ 8 k^2 sin^{2n+3} p + (1 - k^2)(3 + 8n) sin^{2n+1} p ]
            / (1 - k^2 cos^2 p)^{n - 1/2} dp,

whose n = 0 term has the closed form implemented by
``zeroth_order_approx``.  Four routes are provided: the semi-analytic 1D
integral, the series, the zeroth-order closed form, and nested 2D
quadrature of the double integral above.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .common import Method, VolumeResult, validate_offset_angle
from .elliptic import DomainError, Modulus, complete_ke, series_coefficient
from .quadrature import QuadratureError, integrate_adaptive

__all__ = [
    "ConeSphereParams",
    "SeriesBreakdown",
    "TruncationWarning",
    "modulus_profile",
    "rho_max",
    "volume_semi_analytic",
    "volume_quad_2d",
    "series_term",
    "volume_series",
    "zeroth_order_approx",
    "odd_theta_terms_vanish_check",
    "DEFAULT_TOL",
    "DEFAULT_BUDGET",
]

DEFAULT_TOL = 1e-10
DEFAULT_BUDGET = 1_000_000


class TruncationWarning(UserWarning):
    """The series hit its term cap before the stopping tolerance."""


@dataclass(frozen=True)
class ConeSphereParams:
    """Sphere center offset k along -x and cone half-angle alpha in radians."""

    k: float
    alpha: float

    def __post_init__(self) -> None:
        validate_offset_angle(self.k, self.alpha)


@dataclass(frozen=True)
class SeriesBreakdown:
    """Per-term diagnostics of the series evaluation."""

    terms: tuple
    partial_sums: tuple
    truncation_estimate: float
    n_used: int
    truncated: bool


def _one_minus_k2(k: float) -> float:
    # exact 0 at k = 1, no cancellation elsewhere
    return (1.0 - k) * (1.0 + k)


def modulus_profile(params: ConeSphereParams, phi: float) -> Modulus:
    """Composite modulus mu(phi) = k sin(phi) / sqrt(1 - k^2 cos^2 phi).

    Strictly increasing from 0 to k on [0, pi/2] for 0 < k < 1; identically
    k at the endpoints k = 0 and (for phi > 0) k = 1.  The 0/0 corner at
    k = 1, phi = 0 is resolved to 0, where every volume integrand vanishes
    anyway.
    """
    k = params.k
    s = math.sin(phi)
    if k == 0.0 or s == 0.0:
        return Modulus(0.0)
    root = math.sqrt(_one_minus_k2(k) + (k * s) ** 2)
    return Modulus(min(k * s / root, 1.0))


def rho_max(params: ConeSphereParams, theta, phi):
    """Radial extent of the sphere from the origin along (theta, phi).

    The positive root of rho^2 + 2 k rho cos(theta) sin(phi) + k^2 - 1 = 0;
    accepts scalars or numpy arrays.
    """
    k = params.k
    proj = k * np.cos(theta) * np.sin(phi)
    return np.sqrt(_one_minus_k2(k) + proj * proj) - proj


def volume_semi_analytic(params: ConeSphereParams, tol: float = DEFAULT_TOL,
                         budget: int = DEFAULT_BUDGET) -> VolumeResult:
    """One-dimensional quadrature with elliptic-kernel integrand.

    At k = 1 the K(mu) weight (1 - k^2) is exactly zero, so the otherwise
    divergent first-kind factor is never evaluated and the integrand
    reduces to (32/9) sin^4 phi.
    """
    k = params.k
    k2 = k * k
    comp = _one_minus_k2(k)

    def integrand(phi):
        s = np.sin(phi)
        root = np.sqrt(comp + (k * s) ** 2)  # sqrt(1 - k^2 cos^2 phi)
        if k > 0.0:
            mu = np.minimum(k * s / root, 1.0)
        else:
            mu = np.zeros_like(s)
        first, second = complete_ke(mu)
        out = (4.0 / 9.0) * (8.0 * k2 * s ** 3 + 7.0 * comp * s) * root * second
        if comp > 0.0:
            out = out - (16.0 / 9.0) * comp * s * root * first
        return out

    res = integrate_adaptive(integrand, 0.0, params.alpha, tol, budget)
    if not res.converged:
        raise QuadratureError(
            f"semi-analytic quadrature missed tol {tol:g} within {budget} evaluations"
        )
    return VolumeResult(res.value, Method.SEMI_ANALYTIC, res.error_estimate,
                        res.evaluations)


def volume_quad_2d(params: ConeSphereParams, tol: float = 1e-9,
                   budget: int = DEFAULT_BUDGET) -> VolumeResult:
    """Nested adaptive quadrature of the symmetry-reduced double integral.

    theta runs inside, phi outside.  The inner tolerance is split so the
    accumulated inner error stays under tol/2 across the outer interval.
    """
    k = params.k
    k2 = k * k
    comp = _one_minus_k2(k)
    alpha = params.alpha
    inner_tol = 0.25 * tol / alpha
    count = [0]

    def inner(phi: float) -> float:
        s = math.sin(phi)
        s3 = s ** 3

        def over_theta(theta):
            ct = np.cos(theta)
            root = np.sqrt(comp + (k * s * ct) ** 2)
            return ((16.0 / 3.0) * k2 * ct * ct * s3 + (4.0 / 3.0) * comp * s) * root

        res = integrate_adaptive(over_theta, 0.0, 0.5 * math.pi, inner_tol, budget)
        count[0] += res.evaluations
        if not res.converged or count[0] > budget:
            raise QuadratureError(
                f"2D quadrature missed tol {tol:g} within {budget} evaluations"
            )
        return res.value

    def outer(phis):
        return np.array([inner(p) for p in np.atleast_1d(phis)])

    res = integrate_adaptive(outer, 0.0, alpha, 0.5 * tol, budget)
    if not res.converged:
        raise QuadratureError(
            f"2D quadrature missed tol {tol:g} within {budget} evaluations"
        )
    return VolumeResult(res.value, Method.QUAD_2D,
                        res.error_estimate + alpha * inner_tol, count[0])


def _series_term_quad(params: ConeSphereParams, n: int, tol: float, budget: int):
    """(T_n, integrand evaluations) for the n-th series term.

    The k^{2n} prefactor is folded into the integrand as mu(phi)^{2n}
    = (k^2 sin^2 / (1 - k^2 cos^2))^n, keeping every factor in [0, 1] and
    ruling out overflow of (1 - k^2 cos^2 phi)^{1/2 - n} at large n.
    """
    if n < 0:
        raise DomainError("series index must be nonnegative")
    k = params.k
    if k == 0.0 and n >= 1:
        return 0.0, 0
    k2 = k * k
    comp = _one_minus_k2(k)
    prefactor = (2.0 * math.pi / 9.0) * series_coefficient(n) / (1.0 - 2.0 * n)
    weight = comp * (3.0 + 8.0 * n)

    def integrand(phi):
        s = np.sin(phi)
        s2 = s * s
        base = comp + k2 * s2  # 1 - k^2 cos^2 phi
        return (8.0 * k2 * s2 + weight) * s * np.sqrt(base) * (k2 * s2 / base) ** n

    res = integrate_adaptive(integrand, 0.0, params.alpha, tol / abs(prefactor), budget)
    if not res.converged:
        raise QuadratureError(
            f"series term n={n} missed tol {tol:g} within {budget} evaluations"
        )
    return prefactor * res.value, res.evaluations


def series_term(params: ConeSphereParams, n: int, tol: float = 1e-12,
                budget: int = DEFAULT_BUDGET) -> float:
    """The n-th term T_n of the series, quadrature accurate to tol."""
    value, _ = _series_term_quad(params, n, tol, budget)
    return value


def volume_series(params: ConeSphereParams, term_tol: float = 1e-12,
                  n_max: int = 64, budget: int = DEFAULT_BUDGET):
    """Sum series terms until |T_n| < term_tol or n_max terms are spent.

    Returns (VolumeResult, SeriesBreakdown).  Hitting the cap first issues
    a TruncationWarning (expected for k near 1 with alpha near pi/2) and
    marks the breakdown, but still returns the partial sum.

    Each term's quadrature runs at 0.01 * term_tol, floored at 1e-13 where
    roundoff in the panel sums takes over; term_tol much below that floor
    buys nothing.
    """
    if not term_tol > 0.0:
        raise DomainError("term_tol must be positive")
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    quad_tol = max(0.01 * term_tol, 1e-13)
    terms = []
    partial = []
    total = 0.0
    evaluations = 0
    truncated = False
    for n in range(n_max):
        t, used = _series_term_quad(params, n, quad_tol, budget)
        evaluations += used
        total += t
        terms.append(t)
        partial.append(total)
        if abs(t) < term_tol:
            break
        if params.k == 0.0:
            break  # every further term carries a factor k^{2n} = 0
    else:
        truncated = True
    if truncated:
        warnings.warn(
            f"series cap n_max={n_max} reached with |T| = {abs(terms[-1]):.3e} "
            f">= term_tol = {term_tol:g}",
            TruncationWarning,
            stacklevel=2,
        )
    # at k = 0 the break above is exact, not a truncation
    trunc_est = 0.0 if params.k == 0.0 else abs(terms[-1])
    err = trunc_est + quad_tol * len(terms)
    breakdown = SeriesBreakdown(tuple(terms), tuple(partial), trunc_est,
                                len(terms), truncated)
    return VolumeResult(total, Method.SERIES, err, evaluations), breakdown


def zeroth_order_approx(params: ConeSphereParams) -> float:
    """Closed form of the series' n = 0 term; exact in the k -> 0 limit.

    (pi/9) [ (5 + k^2) sqrt(1 - k^2)
             - cos(a) (5 + 5k^2 - 4k^2 cos^2 a) sqrt(1 - k^2 cos^2 a)
             + (1 + 5k^2) (arcsin k - arcsin(k cos a)) / k ]

    with the arcsine quotient replaced by its limit 1 - cos(a) below
    k = 1e-8.  The first omitted series term carries k^2, so the
    approximation error is O(k^2) at fixed alpha.
    """
    k = params.k
    k2 = k * k
    c = math.cos(params.alpha)
    s = math.sin(params.alpha)
    edge = math.sqrt(_one_minus_k2(k))
    slant = math.sqrt(_one_minus_k2(k) + (k * s) ** 2)  # sqrt(1 - k^2 cos^2 a)
    if k < 1e-8:
        arc = 1.0 - c
    else:
        arc = (math.asin(k) - math.asin(k * c)) / k
    return (math.pi / 9.0) * (
        (5.0 + k2) * edge
        - c * (5.0 + 5.0 * k2 - 4.0 * k2 * c * c) * slant
        + (1.0 + 5.0 * k2) * arc
    )


def odd_theta_terms_vanish_check(params: ConeSphereParams, phi: float,
                                 tol: float = 1e-12) -> float:
    """Integral over theta in [0, 2pi] of the discarded odd part; ~0.

    The dropped integrand is k^3 cos(t) sin^2(p) - k cos(t) sin^2(p)
    - (4/3) k^3 cos^3(t) sin^4(p) at fixed p = phi.
    """
    k = params.k
    if k == 0.0:
        return 0.0
    s2 = math.sin(phi) ** 2
    s4 = s2 * s2
    k3 = k ** 3

    def odd_part(theta):
        ct = np.cos(theta)
        return (k3 - k) * s2 * ct - (4.0 / 3.0) * k3 * s4 * ct ** 3

    res = integrate_adaptive(odd_part, 0.0, 2.0 * math.pi, tol, 100_000)
    return res.value
