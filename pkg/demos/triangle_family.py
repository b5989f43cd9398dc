"""
Poncelet triangles, Jordan blocks and three ways to draw one polygon
=====================================================================

Run with ``python3 demos/triangle_family.py [out.svg]``.
"""

# %%
# Two foci at the origin give the Blaschke product z**3. Every solution set of
# B(z) = conj(lambda) is an equilateral triangle, and all of them are tangent
# to the circle of radius 1/2.
import sys

import numpy as np

from ponceletkit import blaschke, cmv, numrange, opuc, poncelet
from ponceletkit.cli import svg_document

fam = poncelet.PonceletFamily.from_foci([0, 0])
tri = fam.polygon(np.exp(0.4j))
print("triangle vertices:", np.round(tri, 6))
env = poncelet.envelope_curve(fam, np.linspace(0, 2 * np.pi, 8, endpoint=False), 1)
print("envelope radii:   ", np.round(np.abs(env), 12))

# %%
# The vertex set has several realizations. Here the paraorthogonal extension
# and the Blaschke solve are compared with the spectrum of the unitary
# dilation of the cut-off CMV matrix.
rng = np.random.default_rng(1)
foci = 0.8 * np.sqrt(rng.random(4)) * np.exp(2j * np.pi * rng.random(4))
lam = np.exp(1.1j)
alphas = opuc.verblunsky_from_poly(opuc.monic_from_foci(foci))
a = opuc.sort_on_circle(opuc.paraorthogonal_extension(foci, lam))
b = blaschke.solve(blaschke.from_foci(foci), lam)
c = opuc.sort_on_circle(cmv.eigenvalues(cmv.unitary_dilation(alphas, lam)))
print("max disagreement:", max(np.max(np.abs(a - b)), np.max(np.abs(b - c))))

# %%
# The cut-off CMV matrix of the foci is a contraction with rank-one defect whose
# numerical range is bounded by the package curve C_1. For the nilpotent
# Jordan block the range is a disk of radius cos(pi / (n + 1)).
for n in range(2, 7):
    pts = np.array([s.boundary_point for s in numrange.boundary(cmv.jordan_block(n), 180)])
    print(f"J_{n}: radius {np.abs(pts).mean():.12f}  cos(pi/{n + 1}) = {np.cos(np.pi / (n + 1)):.12f}")

# %%
if len(sys.argv) > 1:
    th = np.linspace(0, 2 * np.pi, 400, endpoint=False)
    curves = [(np.exp(1j * th), "black"), (poncelet.envelope_curve(fam, th, 1), "#1f77b4")]
    curves += [(fam.polygon(np.exp(1j * t)), "gray") for t in (0.0, 0.7, 1.6)]
    with open(sys.argv[1], "w") as fh:
        fh.write(svg_document(curves))
