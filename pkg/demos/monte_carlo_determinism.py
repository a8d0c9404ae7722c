"""Counter-based Monte Carlo: reproducible by (seed, n) alone.

Run: python demos/monte_carlo_determinism.py
"""

import math

from conevol import (
    ConeSphereParams,
    cone_sphere_box,
    in_cone_sphere_region,
    mc_volume,
    volume_semi_analytic,
)

p = ConeSphereParams(0.5, math.pi / 3)
box = cone_sphere_box(p)
member = lambda pts: in_cone_sphere_region(pts, p)

truth = volume_semi_analytic(p).volume
print(f"reference volume           : {truth:.12f}")

a = mc_volume(member, box, n=2_000_000, seed=7)
b = mc_volume(member, box, n=2_000_000, seed=7)
c = mc_volume(member, box, n=2_000_000, seed=7, chunk=1234)
print(f"seed 7, default chunking   : {a.mean:.12f} +- {a.std_error:.2e}")
print(f"same call again            : {b.mean:.12f}   identical: {a.mean == b.mean}")
print(f"same seed, chunk=1234      : {c.mean:.12f}   identical: {a.mean == c.mean}")

d = mc_volume(member, box, n=2_000_000, seed=8)
print(f"seed 8                     : {d.mean:.12f}   differs as it should")

sigma = abs(a.mean - truth) / a.std_error
print(f"deviation from reference   : {sigma:.2f} sigma")

# error shrinks like 1/sqrt(n)
print("\nscaling:")
for n in (10_000, 100_000, 1_000_000, 10_000_000):
    est = mc_volume(member, box, n=n, seed=42)
    print(f"  n = {n:>10,d}   mean = {est.mean:.8f}"
          f"   std_error = {est.std_error:.2e}"
          f"   actual |err| = {abs(est.mean - truth):.2e}")
