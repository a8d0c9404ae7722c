"""Cross-method agreement suites behind the ``verify`` subcommand.

Every check pits independently coded routes against each other (closed
form vs quadrature, series vs semi-analytic, kernels vs their defining
integrals, everything vs Monte Carlo), so a sign slip or dropped factor
in any one route shows up as a deviation far above the row tolerance.

Routines are looked up through their module namespaces at call time,
which keeps the suites honest under deliberate fault injection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import cone_cylinder, cone_sphere, elliptic, oracle

__all__ = ["CheckResult", "run_all"]

_PI = math.pi


@dataclass(frozen=True)
class CheckResult:
    """One row of the verification table."""

    name: str
    max_deviation: float
    tolerance: float
    passed: bool


def _row(name: str, deviation: float, tolerance: float) -> CheckResult:
    deviation = float(deviation)
    return CheckResult(name, deviation, tolerance,
                       math.isfinite(deviation) and deviation <= tolerance)


def _cone_cylinder_rows(fast: bool) -> list[CheckResult]:
    if fast:
        ks = [0.0, 0.5, 1.0]
        alphas = [_PI / 6, _PI / 3, _PI / 2]
    else:
        ks = [round(0.1 * i, 1) for i in range(11)]
        alphas = [_PI / 12, _PI / 6, _PI / 4, _PI / 3, 5 * _PI / 12, _PI / 2]

    dev_r3 = 0.0
    dev_reduced = 0.0
    for k in ks:
        for alpha in alphas:
            p = cone_cylinder.ConeCylinderParams(k, alpha)
            closed = cone_cylinder.volume_closed(p).volume
            dev_r3 = max(dev_r3, abs(closed - cone_cylinder.volume_quad_r3(p).volume))
            dev_reduced = max(
                dev_reduced, abs(closed - cone_cylinder.volume_quad_reduced(p).volume))

    dev_cone = 0.0
    dev_tangent = 0.0
    dev_right = 0.0
    for alpha in alphas:
        cot = math.cos(alpha) / math.sin(alpha)
        p0 = cone_cylinder.ConeCylinderParams(0.0, alpha)
        p1 = cone_cylinder.ConeCylinderParams(1.0, alpha)
        dev_cone = max(dev_cone,
                       abs(cone_cylinder.volume_closed(p0).volume - 2 * _PI / 3 * cot))
        dev_tangent = max(dev_tangent,
                          abs(cone_cylinder.volume_closed(p1).volume - 32.0 / 9.0 * cot))
    for k in ks:
        p = cone_cylinder.ConeCylinderParams(k, _PI / 2)
        dev_right = max(dev_right, abs(cone_cylinder.volume_closed(p).volume))

    rng = np.random.Generator(np.random.Philox(20240917))
    dev_odd = 0.0
    for _ in range(3 if fast else 10):
        p = cone_cylinder.ConeCylinderParams(rng.uniform(0.05, 1.0),
                                             rng.uniform(0.1, _PI / 2))
        dev_odd = max(dev_odd, abs(cone_cylinder.odd_terms_vanish_check(p)))

    return [
        _row("cone-cylinder: closed vs quad-r3 ladder", dev_r3, 1e-8),
        _row("cone-cylinder: closed vs quad-reduced ladder", dev_reduced, 1e-8),
        _row("cone-cylinder: k=0 circular-cone limit", dev_cone, 1e-12),
        _row("cone-cylinder: k=1 tangent limit", dev_tangent, 1e-12),
        _row("cone-cylinder: right-angle volume", dev_right, 1e-12),
        _row("cone-cylinder: odd integrand vanishes", dev_odd, 1e-12),
    ]


def _cone_sphere_rows(fast: bool) -> list[CheckResult]:
    if fast:
        ks = [0.0, 0.4, 0.8]
        alphas = [_PI / 6, _PI / 3, _PI / 2]
    else:
        ks = [0.0, 0.2, 0.4, 0.6, 0.8]
        alphas = [_PI / 12, _PI / 6, _PI / 4, _PI / 3, _PI / 2]

    dev_series = 0.0
    dev_2d = 0.0
    for k in ks:
        for alpha in alphas:
            p = cone_sphere.ConeSphereParams(k, alpha)
            semi = cone_sphere.volume_semi_analytic(p).volume
            result, _ = cone_sphere.volume_series(p)
            dev_series = max(dev_series, abs(result.volume - semi))
            dev_2d = max(dev_2d,
                         abs(semi - cone_sphere.volume_quad_2d(p).volume))

    half = 2 * _PI / 3
    dev_half = 0.0
    for k in ([0.0, 0.5, 0.75] if fast else [0.0, 0.25, 0.5, 0.75]):
        p = cone_sphere.ConeSphereParams(k, _PI / 2)
        dev_half = max(dev_half,
                       abs(cone_sphere.volume_semi_analytic(p).volume - half))
    p1 = cone_sphere.ConeSphereParams(1.0, _PI / 2)
    dev_half_k1 = abs(cone_sphere.volume_semi_analytic(p1).volume - half)

    dev_sector = 0.0
    for alpha in alphas:
        p = cone_sphere.ConeSphereParams(1e-8, alpha)
        result, _ = cone_sphere.volume_series(p)
        dev_sector = max(dev_sector,
                         abs(result.volume - half * (1.0 - math.cos(alpha))))

    rng = np.random.Generator(np.random.Philox(20240918))
    dev_zeroth = 0.0
    dev_odd = 0.0
    for _ in range(3 if fast else 10):
        k = rng.uniform(0.05, 1.0)
        alpha = rng.uniform(0.1, _PI / 2)
        p = cone_sphere.ConeSphereParams(k, alpha)
        dev_zeroth = max(dev_zeroth, abs(cone_sphere.zeroth_order_approx(p)
                                         - cone_sphere.series_term(p, 0)))
        dev_odd = max(dev_odd, abs(cone_sphere.odd_theta_terms_vanish_check(
            p, rng.uniform(0.0, _PI / 2))))

    return [
        _row("cone-sphere: series vs semi-analytic ladder", dev_series, 1e-7),
        _row("cone-sphere: semi-analytic vs quad-2d ladder", dev_2d, 1e-7),
        _row("cone-sphere: half-ball invariance (k<1)", dev_half, 1e-7),
        _row("cone-sphere: half-ball invariance (k=1)", dev_half_k1, 1e-6),
        _row("cone-sphere: small-offset sector limit", dev_sector, 1e-9),
        _row("cone-sphere: zeroth term closed form", dev_zeroth, 1e-10),
        _row("cone-sphere: odd integrand vanishes", dev_odd, 1e-12),
    ]


def _elliptic_rows(fast: bool) -> list[CheckResult]:
    moduli = np.linspace(0.0, 0.999, 40 if fast else 200)
    first, second = elliptic.complete_ke(moduli)
    dev_kernel = 0.0
    for m, k_val, e_val in zip(moduli, first, second):
        qk = oracle.integrate_adaptive(
            lambda t: 1.0 / np.sqrt(1.0 - (m * np.sin(t)) ** 2),
            0.0, _PI / 2, 1e-13)
        qe = oracle.integrate_adaptive(
            lambda t: np.sqrt(1.0 - (m * np.sin(t)) ** 2),
            0.0, _PI / 2, 1e-13)
        dev_kernel = max(dev_kernel, abs(k_val - qk.value), abs(e_val - qe.value))

    dev_series = 0.0
    for m in np.linspace(0.0, 0.7, 8 if fast else 29):
        k_val, e_val = elliptic.complete_ke(float(m))
        dev_series = max(dev_series,
                         abs(elliptic.series_K(float(m), 40) - k_val),
                         abs(elliptic.series_E(float(m), 40) - e_val))

    dev_e2 = 0.0
    for m in [0.0, 0.01, 0.1, 0.5, 0.9, 0.999, 1.0]:
        q = oracle.integrate_adaptive(
            lambda t: np.sin(t) ** 2 * np.sqrt(1.0 - (m * np.sin(t)) ** 2),
            0.0, _PI / 2, 1e-13)
        dev_e2 = max(dev_e2, abs(elliptic.e2(m) - q.value))

    return [
        _row("elliptic: kernels vs defining integrals", dev_kernel, 1e-11),
        _row("elliptic: Maclaurin series vs AGM", dev_series, 1e-12),
        _row("elliptic: e2 identity vs quadrature", dev_e2, 1e-11),
    ]


def _monte_carlo_rows(fast: bool, samples: int, seed: int) -> list[CheckResult]:
    if fast:
        samples = min(samples, 200_000)

    dev_cc = 0.0
    for i, (k, alpha) in enumerate([(0.3, _PI / 4), (0.7, _PI / 3)]):
        p = cone_cylinder.ConeCylinderParams(k, alpha)
        est = oracle.mc_volume(
            lambda pts: oracle.in_cone_cylinder_region(pts, p),
            oracle.cone_cylinder_box(p), samples, seed + i)
        ref = cone_cylinder.volume_closed(p).volume
        dev_cc = max(dev_cc, abs(est.mean - ref) / est.std_error)

    dev_cs = 0.0
    for i, (k, alpha) in enumerate([(0.0, _PI / 2), (0.5, _PI / 3)]):
        p = cone_sphere.ConeSphereParams(k, alpha)
        est = oracle.mc_volume(
            lambda pts: oracle.in_cone_sphere_region(pts, p),
            oracle.cone_sphere_box(p), samples, seed + 2 + i)
        ref = cone_sphere.volume_semi_analytic(p).volume
        dev_cs = max(dev_cs, abs(est.mean - ref) / est.std_error)

    return [
        _row("monte-carlo: cone-cylinder agreement (sigma units)", dev_cc, 3.0),
        _row("monte-carlo: cone-sphere agreement (sigma units)", dev_cs, 3.0),
    ]


def run_all(fast: bool = False, samples: int = 10_000_000,
            seed: int = 42) -> list[CheckResult]:
    """Run every suite; a row per check, all tolerances pre-baked."""
    rows: list[CheckResult] = []
    rows.extend(_elliptic_rows(fast))
    rows.extend(_cone_cylinder_rows(fast))
    rows.extend(_cone_sphere_rows(fast))
    rows.extend(_monte_carlo_rows(fast, samples, seed))
    return rows
