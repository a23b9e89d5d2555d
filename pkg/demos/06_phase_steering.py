#!/usr/bin/env python3
"""Steering degradation into enhancement with the superposition phase.

Start from the entangled one-excitation state cos(t)|A> + sin(t)e^{i*p}|S>.
Only the AS coherence feels the exchange, through the term
-2 d sin^2(2t) sin(2p) in C'(0), odd in the phase p and gone when d = 0.
At small separation d is large, so flipping the sign of p flips the fate of
the initial entanglement.  The showcase point: t = pi/6, p = -pi/4 at
a/w = 1/2, wL = 3/10.
"""

import math

from unruh_pair import (
    SimConfig,
    coefficients,
    concurrence_x,
    evolve,
    initial_rate_superposition,
    initial_superposition,
    numerical_initial_rate,
)

THETA = math.pi / 6
POINT = dict(accel_ratio=0.5, separation=0.3)
print(__doc__)

on = coefficients(SimConfig(**POINT))
off = coefficients(SimConfig(**POINT, include_interaction=False))
print(f"point: a/w = {POINT['accel_ratio']}, wL = {POINT['separation']}, "
      f"d = {on.d:+.4f} (in units of Gamma0)\n")

print("1) C'(0) for the two phase signs (weight theta = pi/6)")
print(f"   {'phi':>8} {'exchange on':>13} {'exchange off':>13}")
for phi in (math.pi / 4, -math.pi / 4):
    r_on = initial_rate_superposition(on, THETA, phi)
    r_off = initial_rate_superposition(off, THETA, phi)
    print(f"   {phi:+8.4f} {r_on:+13.5f} {r_off:+13.5f}")
print("   -> without the exchange the phase sign is irrelevant; with it,")
print("      phi = -pi/4 turns initial degradation into enhancement.\n")

print("2) the finite-difference oracle agrees (and pins the sign conventions)")
for phi in (math.pi / 4, -math.pi / 4):
    analytic = initial_rate_superposition(on, THETA, phi)
    numeric = numerical_initial_rate(initial_superposition(THETA, phi), on)
    print(f"   phi = {phi:+.4f}: analytic {analytic:+.8f}  numeric {numeric:+.8f}  "
          f"diff {abs(analytic - numeric):.1e}")
print()

print("3) short-time evolution of the concurrence for phi = -pi/4")
s0 = initial_superposition(THETA, -math.pi / 4)
print(f"   {'tau':>6} {'C (exchange on)':>16} {'C (exchange off)':>17}")
for tau in (0.0, 0.05, 0.1, 0.2, 0.4, 0.8):
    c_on = concurrence_x(evolve(s0, on, tau)).c
    c_off = concurrence_x(evolve(s0, off, tau)).c
    print(f"   {tau:6.2f} {c_on:16.6f} {c_off:17.6f}")
print("   -> the exchange-on curve climbs above its starting value before decaying;")
print("      the exchange-off curve only decays.")
