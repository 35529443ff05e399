"""
The petal domain and its neighbours
===================================

Draws the boundary of ``rho(D)`` for ``rho(z) = 1 + asinh(z)`` together with
the half-planes, sector, parabola, ellipse and disks that bound it, and
writes the overlay to ``petal.svg``.
"""

import math

import numpy as np

from petalstar.cli import curve, svg_text
from petalstar.petal import bounds, contains, inclusion_geometry

# The boundary is smooth, so a few thousand uniform samples in theta suffice.
param, gamma0 = curve("gamma0", 4096)
print(f"boundary samples: {gamma0.size}")
print(f"real extent: [{gamma0.real.min():.6f}, {gamma0.real.max():.6f}]")
print(f"imaginary extent: +-{gamma0.imag.max():.6f} (pi/2 = {math.pi / 2:.6f})")

# Membership uses |sinh(w - 1)| < 1 restricted to the strip |Im w| < pi/2.
for w in (1.0, 1.8, 1 + 1.5j, 1 + 1.6j):
    print(f"  {w!s:>10}  inside: {contains(w)}")

# Images of smaller circles nest inside the petal.
for r in (0.25, 0.5, 0.75, 1.0):
    b = bounds(r)
    print(f"r = {r:4.2f}: Re in [{b.re_min:.4f}, {b.re_max:.4f}], Im max {b.im_max:.4f}")

geo = inclusion_geometry()
print(f"sector half-angle {geo.sector.half_angle:.6f}, parabola focus {geo.parabola.focus:.6f}")

# Close the periodic curves before drawing.
curves = []
for name in ("gamma0", "gamma1", "gamma2", "gamma3", "gamma4", "gamma5", "gamma6", "gamma7"):
    _, pts = curve(name, 512)
    if name in ("gamma0", "gamma5", "gamma6", "gamma7"):
        pts = np.append(pts, pts[0])
    curves.append(pts)

with open("petal.svg", "w") as fh:
    fh.write(svg_text(curves))
print("wrote petal.svg")
