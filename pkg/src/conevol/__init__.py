"""Exact and numerical volumes of cone-cylinder and cone-sphere overlaps.

Two solids, both governed by an offset parameter k in [0, 1] and a cone
half-angle alpha in (0, pi/2]:

* cone-cylinder: the region inside the unit cylinder, above z = 0, and
  below a cone whose apex sits on the base plane at distance k from the
  cylinder axis.
* cone-sphere: the region inside a unit sphere centered at (-k, 0, 0)
  and inside the upright cone z >= cot(alpha) sqrt(x^2 + y^2).

Each volume is computed by several independent routes (closed forms in
complete elliptic integrals, reduced and direct quadrature, a Maclaurin
series, and Monte Carlo hit counting) so the routes cross-check one
another to tight tolerances.
"""

from .common import Method, VolumeResult
from .cone_cylinder import (
    ConeCylinderParams,
    odd_terms_vanish_check,
    radial_extent,
    volume_closed,
    volume_quad_r3,
    volume_quad_reduced,
)
from .cone_sphere import (
    ConeSphereParams,
    SeriesBreakdown,
    TruncationWarning,
    modulus_profile,
    odd_theta_terms_vanish_check,
    rho_max,
    series_term,
    volume_quad_2d,
    volume_semi_analytic,
    volume_series,
    zeroth_order_approx,
)
from .elliptic import (
    AgmConfig,
    ConvergenceError,
    DomainError,
    Modulus,
    complete_E,
    complete_K,
    complete_ke,
    e2,
    series_E,
    series_K,
    series_coefficient,
)
from .oracle import (
    McEstimate,
    cone_cylinder_box,
    cone_sphere_box,
    in_cone_cylinder_region,
    in_cone_sphere_region,
    mc_volume,
)
from .quadrature import QuadratureError, QuadratureResult, integrate_adaptive
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "AgmConfig",
    "CheckResult",
    "ConeCylinderParams",
    "ConeSphereParams",
    "ConvergenceError",
    "DomainError",
    "McEstimate",
    "Method",
    "Modulus",
    "QuadratureError",
    "QuadratureResult",
    "SeriesBreakdown",
    "TruncationWarning",
    "VolumeResult",
    "complete_E",
    "complete_K",
    "complete_ke",
    "cone_cylinder_box",
    "cone_sphere_box",
    "e2",
    "in_cone_cylinder_region",
    "in_cone_sphere_region",
    "integrate_adaptive",
    "mc_volume",
    "modulus_profile",
    "odd_terms_vanish_check",
    "odd_theta_terms_vanish_check",
    "radial_extent",
    "rho_max",
    "run_all",
    "series_E",
    "series_K",
    "series_coefficient",
    "series_term",
    "volume_closed",
    "volume_quad_2d",
    "volume_quad_r3",
    "volume_quad_reduced",
    "volume_semi_analytic",
    "volume_series",
    "zeroth_order_approx",
    "__version__",
]
