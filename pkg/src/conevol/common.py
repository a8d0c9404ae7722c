"""Shared result containers and parameter validation for both solids."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .elliptic import DomainError

__all__ = ["Method", "VolumeResult", "MIN_ALPHA", "validate_offset_angle", "half_angle_cot"]

# cot(alpha) grows without bound as alpha -> 0; volumes stay finite and exact
# down to this floor, below it the caller is on their own and we refuse.
MIN_ALPHA = 1e-6


class Method(str, Enum):
    """Tag identifying which evaluation route produced a volume."""

    CLOSED_FORM = "closed_form"
    QUAD_R3 = "quad_r3"
    QUAD_REDUCED = "quad_reduced"
    SERIES = "series"
    SEMI_ANALYTIC = "semi_analytic"
    QUAD_2D = "quad_2d"
    MONTE_CARLO = "monte_carlo"
    ZEROTH_APPROX = "zeroth_approx"


@dataclass(frozen=True)
class VolumeResult:
    """A computed volume (units of the unit radius cubed) plus provenance.

    ``evaluations`` counts integrand calls or Monte Carlo samples; closed
    forms report 0.
    """

    volume: float
    method: Method
    error_estimate: float
    evaluations: int


def validate_offset_angle(k: float, alpha: float) -> None:
    if math.isnan(k) or not 0.0 <= k <= 1.0:
        raise DomainError(f"offset k must lie in [0, 1], got {k!r}")
    if math.isnan(alpha) or not MIN_ALPHA < alpha <= 0.5 * math.pi:
        raise DomainError(
            f"cone half-angle must lie in ({MIN_ALPHA:g}, pi/2], got {alpha!r}"
        )


def half_angle_cot(alpha: float) -> float:
    return math.cos(alpha) / math.sin(alpha)
