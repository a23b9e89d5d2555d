#!/usr/bin/env python3
"""Birth, oscillation and death of entanglement from a separable start.

The pair starts in |10> (one excitation, no entanglement).  The shared bath
builds concurrence up to a maximum, then drains it away into the thermal
asymptotic state.  Kept exchange (d != 0) does two things visible here: it
raises the curve, and it writes a damped oscillation into it through the
phase e^{-4 i d tau} of the antisymmetric-symmetric coherence.
"""

import numpy as np

from unruh_pair import (
    SimConfig,
    asymptotic_concurrence,
    coefficients,
    concurrence_x,
    evolve,
    initial_product_eg,
    max_concurrence,
    trajectory,
)

ACCEL, SEP = 0.1, 0.5
print(__doc__)
print(f"parameter point: a/w = {ACCEL}, wL = {SEP}, start |10>\n")

s0 = initial_product_eg()
curves = {}
for with_d in (True, False):
    c = coefficients(SimConfig(accel_ratio=ACCEL, separation=SEP,
                               include_interaction=with_d))
    curves[with_d] = c

print(f"{'tau':>6} {'C (exchange on)':>16} {'C (exchange off)':>17}")
for tau in (0.0, 0.5, 0.7, 1.0, 1.5, 2.0, 2.3, 3.0, 5.0, 10.0, 20.0):
    row = []
    for with_d in (True, False):
        state = evolve(s0, curves[with_d], tau)
        row.append(concurrence_x(state).c)
    print(f"{tau:6.1f} {row[0]:16.6f} {row[1]:17.6f}")
print()

for with_d in (True, False):
    c_max, tau_star = max_concurrence(s0, curves[with_d])
    label = "on " if with_d else "off"
    print(f"peak concurrence (exchange {label}): {c_max:.6f} at tau = {tau_star:.4f}")

print("\ncounting interior maxima over tau in [0, 20] (the oscillation signature):")
for with_d in (True, False):
    cs = np.array([concurrence_x(s).c for _, s in trajectory(s0, curves[with_d], 20.0, 2001)])
    n_max = sum(
        1 for k in range(1, 2000)
        if cs[k] > cs[k - 1] and cs[k] >= cs[k + 1] and cs[k] > 1e-9
    )
    print(f"   exchange {'on ' if with_d else 'off'}: {n_max} local maxima")

print("\nasymptotics (identical with and without the exchange):")
print(f"   C(infinity) exchange on : {asymptotic_concurrence(curves[True]):.3e}")
print(f"   C(infinity) exchange off: {asymptotic_concurrence(curves[False]):.3e}")
print("\nNote the long tail: the antisymmetric channel is subradiant at this")
print(f"separation (decay rate 4*(a1-a2) = {4 * (curves[True].a1 - curves[True].a2):.4f}),")
print("so the concurrence needs hundreds of 1/Gamma0 to actually vanish.")
