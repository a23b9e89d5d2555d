#!/usr/bin/env python3
"""Where in (wL, a/w) space can entanglement be generated from |10>?

Entanglement appears right after tau = 0 iff a2^2 + d^2 > a1^2 - b1^2.
Dropping the exchange removes d^2 from the left side, so its region is a
strict subset.  This script scans the plane, prints the node counts, and
draws a coarse ASCII phase diagram (#: both, +: only with exchange, .: none).
"""

import numpy as np

from unruh_pair import default_region_scan, region_scan

print(__doc__)

mask = default_region_scan(300)
on = int(mask.with_interaction.sum())
off = int(mask.without_interaction.sum())
total = mask.with_interaction.size
print(f"default window: wL in (0, 6], a/w in (0, 10], 300 x 300 nodes")
print(f"   generation possible with exchange   : {on:6d} nodes ({100 * on / total:.1f}%)")
print(f"   generation possible without exchange: {off:6d} nodes ({100 * off / total:.1f}%)")
print(f"   exchange-only nodes                 : {on - off:6d} (+{100 * (on - off) / off:.1f}%)")
superset = not np.any(mask.without_interaction & ~mask.with_interaction)
print(f"   exchange-off region contained in exchange-on region: {superset}\n")

coarse = region_scan((0.1, 6.0), (0.2, 10.0), (60, 25))
print("ASCII phase diagram (rows: a/w top-down, columns: wL left-right)")
for i in reversed(range(25)):
    row = []
    for j in range(60):
        if coarse.without_interaction[i, j]:
            row.append("#")
        elif coarse.with_interaction[i, j]:
            row.append("+")
        else:
            row.append(".")
    print(f"   a/w={coarse.accel[i]:5.1f} |{''.join(row)}|")
print(f"           wL: {coarse.omega_l[0]:.1f} ... {coarse.omega_l[-1]:.1f}")
print("\nReading: the '#' tongue near small wL survives to high acceleration;")
print("the '+' fringe is what the environment-induced exchange adds.")
