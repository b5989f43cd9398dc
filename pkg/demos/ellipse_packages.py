"""
Packages made of ellipses
=========================

Run with ``python3 demos/ellipse_packages.py [out.svg]``.
"""

# %%
# Pick two foci and ask for the ellipse with those foci whose circumscribed
# Poncelet polygons close after n steps.
import sys

import numpy as np

from ponceletkit import ellipse, poncelet
from ponceletkit.cli import svg_document

f1, f2 = 0.3 + 0.2j, -0.25 - 0.1j
n = 5
e = ellipse.EllipseComponent(f1, f2, ellipse.closure_semiaxis(f1, f2, n))
print("minor semiaxis:", e.s)
for t in (0.0, 1.0, 2.5):
    orbit = ellipse.circular_iteration(e, np.exp(1j * t))
    print(f"start angle {t}: closes after {orbit.n} steps")

# %%
# The inner iteration produces n - 1 foci whose Blaschke package contains the
# ellipse as C_1. The remaining components are ellipses with foci
# (w_k, w_{n-k}) and, for even n, the single point w_{n/2}.
e, foci = ellipse.package_from_ellipse(f1, f2, n)
print("package foci:", np.round(foci, 6))
comps = ellipse.package_factor(foci)
print("factorization residual:", comps.residual)
for k, c in enumerate(comps, start=1):
    rank, turns = poncelet.component_rank(n, k)
    print(f"C_{k}: s = {c.s:.9f}, rank {rank}, closes after {ellipse.circular_iteration(c).n}")

# %%
# Sampled envelopes of the package lie on those ellipses.
fam = poncelet.PonceletFamily.from_foci(foci)
th = np.linspace(0, 2 * np.pi, 400, endpoint=False)
for k, c in enumerate(comps, start=1):
    p = poncelet.envelope_curve(fam, th, k)
    dev = np.max(np.abs(np.abs(p - c.f1) + np.abs(p - c.f2) - 2 * c.major))
    print(f"C_{k}: max focal-sum deviation {dev:.2e}")

# %%
if len(sys.argv) > 1:
    colors = ["#1f77b4", "#d62728"]
    curves = [(np.exp(1j * th), "black")]
    curves += [(ellipse.ellipse_points(c, th), colors[i % 2]) for i, c in enumerate(comps)]
    curves += [(fam.polygon(np.exp(1j * t)), "gray") for t in (0.3, 1.9)]
    with open(sys.argv[1], "w") as fh:
        fh.write(svg_document(curves))
