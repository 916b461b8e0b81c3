"""Phase-space portraits: factorized bumps vs correlation ridges.

The ground-state Wigner distribution is a normalized Gaussian on
(x1,p1,x2,p2).  Clamping one conjugate-looking pair and scanning the
other gives a product of two bumps; scanning the correlated pairs
(x1,p2) or (x2,p1) instead exposes a ridge that does not factorize.
The effect is starkest for the tilted illustration moments, whose
quadratic form is rank two.
"""

import numpy as np

from ncho import (
    PhysicalParams,
    covariance,
    ground_state,
    illustration_covariance,
    marginal_position,
    project,
    psi0,
    to_commutative,
    wigner_form,
)


def rank_ratio(values):
    s = np.linalg.svd(values, compute_uv=False)
    return s[1] / s[0]


wf = wigner_form(illustration_covariance())
print("illustration moments: exponent matrix")
print(wf.m)
print(f"degenerate: {wf.degenerate}, prefactor 2/pi = {wf.norm!r}")

axes = ((-4.0, 4.0, 81), (-4.0, 4.0, 81))
print("\nslice structure (second/first singular value of the grid)")
for plane, fixed in [
    (("x2", "p2"), {"x1": 1.0, "p1": 1.0}),
    (("x1", "p1"), {"x2": 1.0, "p2": 1.0}),
    (("x1", "x2"), {"p1": 1.0, "p2": 1.0}),
    (("p1", "p2"), {"x1": 1.0, "x2": 1.0}),
    (("x1", "p2"), {"p1": 1.0, "x2": 1.0}),
    (("x2", "p1"), {"x1": 1.0, "p2": 1.0}),
]:
    grid = project(wf, plane, fixed, axes)
    ratio = rank_ratio(grid.values)
    kind = "factorized bumps" if ratio < 1e-10 else "ridge"
    print(f"  plane {plane[0]:>2s},{plane[1]:<2s} fixed {fixed} -> "
          f"ratio {ratio:.2e}  ({kind})")

# a physical parameter point: closed form vs the position marginal
p = PhysicalParams(m1=1.0, m2=1.5, wt1=1.0, wt2=2.0, theta=0.1, eta=0.4)
gs = ground_state(to_commutative(p))
wfp = wigner_form(covariance(gs))
print("\nphysical point: exponent matrix = V^-1 / 2, normalization")
print(f"  norm * pi^2 / sqrt(det M) = "
      f"{wfp.norm * np.pi**2 / np.sqrt(np.linalg.det(wfp.m))!r}")

g1, g2, density = marginal_position(wfp, axes=((-3, 3, 61), (-3, 3, 61)))
want = np.abs(psi0(gs, g1[:, None], g2[None, :])) ** 2
print(f"  max |marginal - |psi0|^2| = {np.max(np.abs(density - want)):.3e}")
