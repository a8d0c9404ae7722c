"""Volume under an offset cone inside the unit cylinder.

The solid is bounded by the cylinder x^2 + y^2 = 1, the plane z = 0 and the
cone z = cot(alpha) sqrt((x - k)^2 + y^2) whose vertex sits on the base at
(k, 0, 0) with 0 <= k <= 1.  In polar coordinates centered on the vertex's
base point, the cylinder wall lies at distance

    R(phi) = sqrt(1 - k^2 sin^2 phi) - k cos phi

and the volume is (2 cot(alpha) / 3) integral 0..pi of R^3 dphi.  Dropping
the phi-odd part of R^3 (its integral vanishes) and folding [0, pi] onto
[0, pi/2] leaves an even integrand in K/E territory, giving the closed form

    V = (4/9) cot(alpha) [ (k^2 + 7) E(k) + 4 (k^2 - 1) K(k) ].

Three independent routes are provided: the closed form, quadrature of R^3,
and quadrature of the reduced even integrand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .common import Method, VolumeResult, half_angle_cot, validate_offset_angle
from .elliptic import DEFAULT_AGM, complete_E, e2
from .quadrature import QuadratureError, integrate_adaptive

__all__ = [
    "ConeCylinderParams",
    "radial_extent",
    "volume_closed",
    "volume_quad_r3",
    "volume_quad_reduced",
    "odd_terms_vanish_check",
    "DEFAULT_TOL",
    "DEFAULT_BUDGET",
]

DEFAULT_TOL = 1e-10
DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class ConeCylinderParams:
    """Cone vertex offset k along +x and cone half-angle alpha in radians."""

    k: float
    alpha: float

    def __post_init__(self) -> None:
        validate_offset_angle(self.k, self.alpha)


def radial_extent(params: ConeCylinderParams, phi):
    """Distance R(phi) from the vertex base point (k, 0) to the unit circle.

    Accepts a scalar angle or a numpy array of angles.
    """
    k = params.k
    c = np.cos(phi)
    # 1 - k^2 sin^2 phi rewritten as (1-k)(1+k) + (k cos phi)^2: both terms
    # are nonnegative, so nothing cancels at k near 1
    return np.sqrt((1.0 - k) * (1.0 + k) + (k * c) ** 2) - k * c


def volume_closed(params: ConeCylinderParams) -> VolumeResult:
    """Closed-form volume in terms of complete elliptic integrals.

    Integrating the even part of R^3 termwise gives

        V = (4/3) cot(alpha) [ (3k^2 + 1) E(k) - 4 k^2 e2(k) ],

    equivalently (4/9) cot(alpha) [ (k^2 + 7) E(k) + 4 (k^2 - 1) K(k) ].
    The e2 form is used directly; it stays finite through k = 1, where
    E(1) = 1 and e2(1) = 1/3 give V = (32/9) cot(alpha).
    """
    k = params.k
    cot = half_angle_cot(params.alpha)
    k2 = k * k
    combo = (3.0 * k2 + 1.0) * complete_E(k) - 4.0 * k2 * e2(k)
    coeff = 4.0 / 3.0 * cot
    # kernel values carry the AGM tolerance; propagate it linearly
    err = coeff * (3.0 * k2 + 1.0 + 4.0 * k2) * DEFAULT_AGM.tolerance
    return VolumeResult(coeff * combo, Method.CLOSED_FORM, err, 0)


def volume_quad_r3(params: ConeCylinderParams, tol: float = DEFAULT_TOL,
                   budget: int = DEFAULT_BUDGET) -> VolumeResult:
    """Adaptive quadrature of R(phi)^3 over [0, pi]."""
    prefactor = 2.0 / 3.0 * half_angle_cot(params.alpha)

    def cubed_extent(phi):
        r = radial_extent(params, phi)
        return r * r * r

    res = integrate_adaptive(cubed_extent, 0.0, math.pi, tol / prefactor, budget)
    if not res.converged:
        raise QuadratureError(
            f"R^3 quadrature missed tol {tol:g} within {budget} evaluations"
        )
    return VolumeResult(prefactor * res.value, Method.QUAD_R3,
                        prefactor * res.error_estimate, res.evaluations)


def volume_quad_reduced(params: ConeCylinderParams, tol: float = DEFAULT_TOL,
                        budget: int = DEFAULT_BUDGET) -> VolumeResult:
    """Adaptive quadrature of the folded even integrand on [0, pi/2].

    The integrand is (3k^2 + 1 - 4k^2 sin^2 phi) sqrt(1 - k^2 sin^2 phi),
    carrying prefactor 4 cot(alpha) / 3.
    """
    k = params.k
    k2 = k * k
    prefactor = 4.0 / 3.0 * half_angle_cot(params.alpha)

    def reduced(phi):
        s = np.sin(phi)
        c = np.cos(phi)
        root = np.sqrt((1.0 - k) * (1.0 + k) + (k * c) ** 2)
        return (3.0 * k2 + 1.0 - 4.0 * k2 * s * s) * root

    res = integrate_adaptive(reduced, 0.0, 0.5 * math.pi, tol / prefactor, budget)
    if not res.converged:
        raise QuadratureError(
            f"reduced quadrature missed tol {tol:g} within {budget} evaluations"
        )
    return VolumeResult(prefactor * res.value, Method.QUAD_REDUCED,
                        prefactor * res.error_estimate, res.evaluations)


def odd_terms_vanish_check(params: ConeCylinderParams, tol: float = 1e-12) -> float:
    """Integral over [0, pi] of the phi-odd part of R^3; should be ~0.

    The discarded part is -k^3 cos^3 - 3k cos + 3k^3 cos sin^2, whose exact
    integral vanishes.  Returning the quadrature value (rather than a bool)
    lets callers regression-check the reduction step at their own tolerance.
    """
    k = params.k
    if k == 0.0:
        return 0.0
    k3 = k ** 3

    def odd_part(phi):
        s = np.sin(phi)
        c = np.cos(phi)
        return -k3 * c ** 3 - 3.0 * k * c + 3.0 * k3 * c * s * s

    res = integrate_adaptive(odd_part, 0.0, math.pi, tol, 100_000)
    return res.value
