"""Evaluate both solids by every route at a few points and tabulate spread.

Run: python demos/cross_check.py
"""

import math

from conevol import (
    ConeCylinderParams,
    ConeSphereParams,
    volume_closed,
    volume_quad_2d,
    volume_quad_r3,
    volume_quad_reduced,
    volume_semi_analytic,
    volume_series,
)


def cone_cylinder_table():
    print("cone-cylinder  (closed / quad-r3 / quad-reduced)")
    print(f"{'k':>5} {'alpha':>7} {'closed':>20} {'spread':>10}")
    for k in (0.0, 0.3, 0.7, 1.0):
        for deg in (30, 60, 85):
            p = ConeCylinderParams(k, math.radians(deg))
            vals = [
                volume_closed(p).volume,
                volume_quad_r3(p).volume,
                volume_quad_reduced(p).volume,
            ]
            spread = max(vals) - min(vals)
            print(f"{k:5.2f} {deg:6d}d {vals[0]:20.15f} {spread:10.2e}")
    print()


def cone_sphere_table():
    print("cone-sphere  (semi-analytic / series / quad-2d)")
    print(f"{'k':>5} {'alpha':>7} {'semi':>20} {'spread':>10}")
    for k in (0.0, 0.4, 0.8):
        for deg in (30, 60, 90):
            p = ConeSphereParams(k, math.radians(deg))
            series_res, _ = volume_series(p)
            vals = [
                volume_semi_analytic(p).volume,
                series_res.volume,
                volume_quad_2d(p).volume,
            ]
            spread = max(vals) - min(vals)
            print(f"{k:5.2f} {deg:6d}d {vals[0]:20.15f} {spread:10.2e}")
    print()


if __name__ == "__main__":
    cone_cylinder_table()
    cone_sphere_table()
    print("half-ball check: cone-sphere at alpha = pi/2 should be 2*pi/3 "
          f"= {2 * math.pi / 3:.15f} for every k")
    for k in (0.0, 0.5, 1.0):
        v = volume_semi_analytic(ConeSphereParams(k, math.pi / 2)).volume
        print(f"  k={k:.1f}: {v:.15f}")
