"""Watch the cone-sphere series converge, and stall as k approaches 1.

Run: python demos/series_convergence.py
"""

import math
import warnings

from conevol import (
    ConeSphereParams,
    TruncationWarning,
    volume_semi_analytic,
    volume_series,
    zeroth_order_approx,
)

ALPHA = math.pi / 2

for k in (0.1, 0.5, 0.9, 0.99):
    p = ConeSphereParams(k, ALPHA)
    truth = volume_semi_analytic(p).volume
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        res, br = volume_series(p)
    print(f"k = {k}")
    print(f"  semi-analytic reference : {truth:.15f}")
    print(f"  series ({br.n_used:3d} terms)      : {res.volume:.15f}"
          f"   |gap| = {abs(res.volume - truth):.2e}"
          f"{'   (hit the term cap)' if br.truncated else ''}")
    shown = [0, 1, 2, br.n_used - 1]
    for n in shown:
        if n < br.n_used:
            print(f"    T_{n:<3d} = {br.terms[n]: .3e}"
                  f"   partial sum = {br.partial_sums[n]:.12f}")
    print()

# the leading term alone is already an O(k^2) approximation
print("zeroth-order closed form vs truth at alpha = pi/3:")
for k in (0.02, 0.05, 0.1, 0.2):
    p = ConeSphereParams(k, math.pi / 3)
    err = zeroth_order_approx(p) - volume_semi_analytic(p).volume
    print(f"  k = {k:5.2f}   error = {err: .3e}   error/k^2 = {err / k**2: .4f}")
