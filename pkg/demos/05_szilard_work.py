"""Running an engine on nothing but mode-mode correlations.

A Gaussian measurement on mode 2 conditions mode 1; the entropy drop
bounds the work an isothermal cycle can extract.  For the oscillator
ground state the work is exactly zero wherever the state is separable
and positive wherever it is entangled, so the engine doubles as an
entanglement witness.
"""

import numpy as np

from ncho import (
    MeasurementSpec,
    PhysicalParams,
    covariance,
    extractable_work,
    ground_state,
    measurement_covariance,
    to_commutative,
)

spec = MeasurementSpec()  # heterodyne, gamma = diag(1/2, 1/2), kB T = 1
print("measurement covariance gamma:")
print(measurement_covariance(spec))

print("\nwork along an eta sweep through the separable surface (eta* = 0.3)")
print("  eta     W(log-det)        W(closed form)")
for eta in (0.0, 0.15, 0.3, 0.45, 0.6, 0.9):
    p = PhysicalParams(m1=1.0, m2=1.5, wt1=1.0, wt2=2.0, theta=0.1, eta=eta)
    res = extractable_work(covariance(ground_state(to_commutative(p))), spec)
    print(f"  {eta:4.2f}  {res.work:+.12e}  {res.work_closed_form:+.12e}")

p = PhysicalParams(m1=1.0, m2=1.5, wt1=1.0, wt2=2.0, theta=0.1, eta=0.3)
res = extractable_work(covariance(ground_state(to_commutative(p))), spec)
print(f"\non the surface itself W = {res.work!r} (separable, nothing to extract)")

# the ground state is pure, so any minimum-uncertainty measurement
# (det gamma = 1/4) steers mode 1 into a pure state: det V1' pins at
# 1/4 and the work cannot depend on the measurement shape at all
p = PhysicalParams(m1=1.0, m2=1.5, wt1=1.0, wt2=2.0, theta=0.1, eta=0.4)
vm = covariance(ground_state(to_commutative(p)))
print("\nmeasurement-shape independence on the entangled point eta = 0.4")
for mu, angle in ((0.5, 0.0), (1.0, 0.0), (2.0, 0.7), (4.0, -1.2)):
    res = extractable_work(vm, MeasurementSpec(mu=mu, angle=angle))
    print(f"  mu = {mu:3.1f} angle = {angle:+4.1f}: W = {res.work:.15e}  "
          f"det_after = {res.det_after:.15f}")

# temperature only rescales the result
res1 = extractable_work(vm, MeasurementSpec(kbt=1.0))
res5 = extractable_work(vm, MeasurementSpec(kbt=5.0))
print(f"\nW(kbt=5) / W(kbt=1) = {res5.work / res1.work!r}")
