"""
Foci {0, 0, 0, a}: what happens when one focus leaves the disk
===============================================================

Run with ``python3 demos/exterior_focus.py``.
"""

# %%
# The Bezoutian form P(z, w) makes sense for foci of any modulus. Its degree
# is N - 1 with N = n + 2m + d, where m counts foci outside the closed disk
# and d those on the circle.
import warnings

import numpy as np

from ponceletkit import poncelet

print(" a     N m d n  on-circle  expected  mirman")
for a in (0.3, 0.7, 0.9, 1.2, 1.5, 2.0, 2.4):
    P = poncelet.bezoutian_build([0, 0, 0, a])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        sol = poncelet.on_circle_solutions(P, 1.0)
    ok, _ = poncelet.mirman_condition([0, 0, 0, a])
    print(f"{a:4.1f}  {P.N} {P.m} {P.d} {P.n}  {sol.count:9d}  {sol.expected:8d}  {ok}")

# %%
# For 1 < a < 5/3 the count at z = 1 stays at 4 rather than dropping to
# N - 1 - 2m = 2. Mirman's condition fails there, so no count is promised.
# P(1, w) is palindromic: with x = w + 1/w it reduces to a quadratic in x
# whose roots both lie in [-2, 2] exactly when a < 5/3.
for a in (1.2, 1.5, 1.7):
    c = 1 - a
    x = np.roots([1, c, c - 2])
    print(f"a={a}: x roots {np.round(x, 4)}, on-circle pairs: {int(np.sum(np.abs(x) <= 2))}")

# %%
# The poles of the tangent chords trace the dual curve. For these foci it is
# the zero set of a quartic in the pole coordinates (u, v).
for a in (0.9, 2.4):
    P = poncelet.bezoutian_build([0, 0, 0, a])
    poles = []
    for t in np.linspace(0.1, 2 * np.pi, 60, endpoint=False):
        for z, w in poncelet.tangent_chords(P, [np.exp(1j * t)]):
            if abs(z + w) > 1e-6:
                poles.append(poncelet.pole_of_chord(z, w))
    poles = np.array(poles)
    g, scale = poncelet.zero_foci_quartic(a, poles.real, poles.imag)
    print(f"a={a}: {poles.size} poles, max relative quartic residual {np.max(np.abs(g) / scale):.2e}")
