"""Independent checks: point-membership tests and Monte Carlo volumes.

These routes share no code with the quadrature or elliptic machinery.
Each solid is defined directly by its Cartesian inequalities, and the
volume is estimated by hit counting over a known bounding box, giving an
answer whose only inputs are the region definition and a counter-based
random stream.

``integrate_adaptive`` is re-exported so callers can cross-check any 1D
integral against the same kernel the volume routines use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .common import half_angle_cot
from .cone_cylinder import ConeCylinderParams
from .cone_sphere import ConeSphereParams
from .elliptic import DomainError
from .quadrature import QuadratureError, QuadratureResult, integrate_adaptive

__all__ = [
    "McEstimate",
    "in_cone_cylinder_region",
    "in_cone_sphere_region",
    "cone_cylinder_box",
    "cone_sphere_box",
    "mc_volume",
    "integrate_adaptive",
    "QuadratureResult",
    "QuadratureError",
]


@dataclass(frozen=True)
class McEstimate:
    """Monte Carlo volume estimate with its one-sigma error."""

    mean: float
    std_error: float
    samples: int
    seed: int
    bounding_volume: float


def in_cone_cylinder_region(points, params: ConeCylinderParams):
    """True where a point is inside the cylinder and below the tilted cone.

    points has shape (n, 3); the cylinder is x^2 + y^2 <= 1 and the cone
    apex sits at (k, 0, 0) opening upward, bounding z from above by
    cot(alpha) sqrt((x - k)^2 + y^2).
    """
    p = np.asarray(points, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    cot = half_angle_cot(params.alpha)
    r_apex = np.sqrt((x - params.k) ** 2 + y * y)
    return (x * x + y * y <= 1.0) & (z >= 0.0) & (z <= cot * r_apex)


def in_cone_sphere_region(points, params: ConeSphereParams):
    """True where a point is inside the offset sphere and inside the cone.

    The sphere is (x + k)^2 + y^2 + z^2 <= 1; the cone, apex at the
    origin with axis +z, keeps z >= cot(alpha) sqrt(x^2 + y^2).
    """
    p = np.asarray(points, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    cot = half_angle_cot(params.alpha)
    return ((x + params.k) ** 2 + y * y + z * z <= 1.0) & (
        z >= cot * np.sqrt(x * x + y * y)
    )


def cone_cylinder_box(params: ConeCylinderParams):
    """Axis-aligned box enclosing the cone-cylinder solid.

    Radially the solid lives in the unit disc; the height tops out where
    the cone is farthest from its apex, at radius 1 + k from it.
    """
    top = half_angle_cot(params.alpha) * (1.0 + params.k)
    return ((-1.0, 1.0), (-1.0, 1.0), (0.0, top))


def cone_sphere_box(params: ConeSphereParams):
    """Axis-aligned box enclosing the cone-sphere solid.

    The sphere is centered at (-k, 0, 0) with radius 1 and the cone keeps
    z >= 0, so [-1 - k, 1 - k] x [-1, 1] x [0, 1] suffices.
    """
    k = params.k
    return ((-1.0 - k, 1.0 - k), (-1.0, 1.0), (0.0, 1.0))


def mc_volume(membership, bbox, n: int, seed: int,
              chunk: int = 1_000_000) -> McEstimate:
    """Hit-or-miss volume estimate over an axis-aligned bounding box.

    membership maps an (m, 3) point array to a boolean mask.  Sampling is
    keyed by (seed, sample index) through a counter-based generator: one
    counter block per point, so the estimate is independent of chunk size
    and the same seed always yields the same result.

    std_error is the binomial one-sigma of the hit fraction scaled by the
    box volume.
    """
    if n < 1:
        raise DomainError("sample count must be positive")
    if not 0 <= seed < 2 ** 64:
        raise DomainError("seed must fit in an unsigned 64-bit integer")
    (x0, x1), (y0, y1), (z0, z1) = bbox
    if not (x0 <= x1 and y0 <= y1 and z0 <= z1):
        raise DomainError("bounding box sides must be ordered")
    volume = (x1 - x0) * (y1 - y0) * (z1 - z0)
    lo = np.array([x0, y0, z0])
    span = np.array([x1 - x0, y1 - y0, z1 - z0])

    hits = 0
    start = 0
    while start < n:
        m = min(chunk, n - start)
        bg = np.random.Philox(seed)
        bg.advance(start)  # counter blocks, one per sample
        u = np.random.Generator(bg).random((m, 4))
        points = lo + span * u[:, :3]
        hits += int(np.count_nonzero(membership(points)))
        start += m

    frac = hits / n
    std_error = volume * math.sqrt(frac * (1.0 - frac) / n)
    return McEstimate(volume * frac, std_error, n, seed, volume)
