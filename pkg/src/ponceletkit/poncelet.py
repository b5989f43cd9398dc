"""Poncelet correspondence, envelope curves C_k and the Bezoutian form P(z, w).

A family is generated by foci ``f_1..f_{n-1}`` in the unit disk. Its
polygons are the level sets ``B(z) = conj(lam)`` of the Blaschke product
``B(z) = z Phi(z) / Phi*(z)``, and ``tau`` advances a vertex counter-clockwise.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import blaschke, cpoly
from ._config import DEFAULT_TOL, ON_CIRCLE_TOL
from .blaschke import BlaschkeProduct
from .opuc import monic_from_foci, sort_on_circle, verblunsky_from_poly

__all__ = [
    "PonceletFamily",
    "InfinitePole",
    "CurveSample",
    "BezoutianP",
    "CircleSolutions",
    "tau",
    "advance",
    "pole_of_chord",
    "chord_pole",
    "envelope_point",
    "envelope_curve",
    "chord_distance_sq",
    "bezoutian_build",
    "on_circle_solutions",
    "tangent_chords",
    "mirman_value",
    "mirman_condition",
    "component_rank",
    "totient_count",
    "sample_package",
    "zero_foci_quartic",
]

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class PonceletFamily:
    """Foci in the open disk plus the derived Blaschke product and Verblunsky data."""

    foci: np.ndarray
    B: BlaschkeProduct = field(repr=False)
    alphas: np.ndarray = field(repr=False)

    @classmethod
    def from_foci(cls, foci) -> "PonceletFamily":
        f = np.array(foci, dtype=complex).ravel()
        if f.size == 0:
            raise ValueError("need at least one focus (n >= 2)")
        if np.any(np.abs(f) >= 1):
            raise ValueError("family foci must lie in the open unit disk; use the Bezoutian for exterior foci")
        f.setflags(write=False)
        alphas = verblunsky_from_poly(monic_from_foci(f))
        alphas.setflags(write=False)
        return cls(f, blaschke.from_foci(f), alphas)

    @property
    def n(self) -> int:
        return self.foci.size + 1

    def polygon(self, lam: complex) -> np.ndarray:
        """Vertices of the Poncelet polygon for ``lam``, counter-clockwise."""
        return blaschke.solve(self.B, lam)


class InfinitePole(NamedTuple):
    """Pole of a chord through the origin; ``direction`` is the chord's unit direction."""

    direction: complex

    def __abs__(self):
        return math.inf


class CurveSample(NamedTuple):
    k: int
    theta: float
    point: complex
    pole: complex | InfinitePole


def _unit(z, tol=1e-9):
    z = complex(z)
    if abs(abs(z) - 1) > tol:
        raise ValueError(f"point {z} is not on the unit circle")
    return z


def tau(fam: PonceletFamily, z: complex, k: int = 1, tol: float = 1e-9) -> complex:
    """Vertex ``k`` steps counter-clockwise from ``z`` in the polygon through ``z``."""
    z = _unit(z)
    if not 1 <= k <= fam.n - 1:
        raise ValueError(f"k must be in 1..{fam.n - 1}")
    lam = np.conj(blaschke.evaluate(fam.B, z))
    lam /= abs(lam)
    pts = fam.polygon(lam)
    d = np.abs(pts - z)
    i = int(np.argmin(d))
    if d[i] > tol:
        raise ArithmeticError(f"z not found in its own polygon (distance {d[i]:.3g})")
    return complex(pts[(i + k) % fam.n])


def advance(fam: PonceletFamily, theta, k: int = 1, xtol: float = 1e-14) -> np.ndarray:
    """Angles of ``tau^k(e^{i theta})``, vectorised over ``theta``.

    ``tau^k`` raises the lifted argument of ``B`` by exactly ``2 pi k``; the
    returned angles lie in ``(theta, theta + 2 pi)``.
    """
    th = np.asarray(theta, dtype=float)
    target = blaschke.lifted_arg(fam.B, th) + TWO_PI * k
    lo, hi = th.copy(), th + TWO_PI
    while np.max(hi - lo, initial=0) > xtol * (1 + np.max(np.abs(th), initial=0)):
        mid = 0.5 * (lo + hi)
        below = blaschke.lifted_arg(fam.B, mid) < target
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    out = 0.5 * (lo + hi)
    out = out + (target - blaschke.lifted_arg(fam.B, out)) / blaschke.arg_derivative(fam.B, np.exp(1j * out))
    return out


def pole_of_chord(z: complex, w: complex, tol: float = 1e-12):
    """``2 z w / (z + w)``, or :class:`InfinitePole` for a diameter."""
    s = z + w
    if abs(s) <= tol:
        d = (w - z) / abs(w - z)
        return InfinitePole(complex(d))
    return complex(2 * z * w / s)


def chord_pole(fam: PonceletFamily, z: complex, k: int = 1):
    w = tau(fam, z, k)
    if abs(w - z) < 1e-14:
        raise ArithmeticError("degenerate chord")
    return pole_of_chord(z, w)


def _line_intersection(p1, d1, p2, d2):
    # p1 + t d1 = p2 + s d2, solved for t by Cramer's rule on real components
    cross = (np.conj(d1) * d2).imag
    t = (np.conj(p2 - p1) * d2).imag / cross
    return p1 + t * d1


def _envelope(fam: PonceletFamily, theta, k, deltas=(1e-3, 5e-4)):
    th = np.asarray(theta, dtype=float)
    est = []
    for d in deltas:
        a, b = th - d, th + d
        za, zb = np.exp(1j * a), np.exp(1j * b)
        wa, wb = np.exp(1j * advance(fam, a, k)), np.exp(1j * advance(fam, b, k))
        est.append(_line_intersection(za, wa - za, zb, wb - zb))
    # central differences have even error expansions: eliminate the delta^2 term
    r = (deltas[0] / deltas[1]) ** 2
    return (r * est[1] - est[0]) / (r - 1)


def envelope_curve(fam: PonceletFamily, theta, k: int = 1) -> np.ndarray:
    """Vectorised :func:`envelope_point` over angles ``theta``."""
    if not 1 <= k <= fam.n - 1:
        raise ValueError(f"k must be in 1..{fam.n - 1}")
    return _envelope(fam, theta, k)


def envelope_point(fam: PonceletFamily, z: complex, k: int = 1) -> complex:
    """Point where the chord ``[z, tau^k(z)]`` touches the envelope ``C_k``.

    Intersection of the chords at ``theta +- delta`` for two step sizes,
    combined by Richardson extrapolation.
    """
    z = _unit(z)
    w = tau(fam, z, k)
    if abs(w - z) < 1e-12:
        raise ArithmeticError("degenerate chord")
    return complex(_envelope(fam, np.angle(z), k))


def chord_distance_sq(z: complex, w: complex, wdot: float) -> float:
    """Squared distance to the origin of the line tangent to the pole curve.

    ``(1 + wdot)^2 / |z + wdot w|^2`` where ``wdot`` is the angular speed of
    ``w = tau^k(z)`` relative to ``z``. At least 1 whenever ``wdot >= 0``.
    """
    return float((1 + wdot) ** 2 / abs(z + wdot * w) ** 2)


# --------------------------------------------------------------------------
# Bezoutian form


@dataclass(frozen=True)
class BezoutianP:
    """``P(z, w) = (w Phi(w) Phi*(z) - z Phi(z) Phi*(w)) / (w - z)``.

    ``coeffs[i, j]`` multiplies ``z^i w^j``; the array is ``N x N`` with
    ``N - 1 = len(foci)``. ``m`` counts foci outside the closed disk and
    ``d`` foci on the circle.
    """

    coeffs: np.ndarray
    foci: np.ndarray
    m: int
    d: int

    @property
    def N(self) -> int:
        return self.coeffs.shape[0]

    @property
    def n(self) -> int:
        return self.N - 2 * self.m - self.d

    def __call__(self, z, w):
        z = np.asarray(z, dtype=complex)
        w = np.asarray(w, dtype=complex)
        zp = z[..., None] ** np.arange(self.N)
        wp = w[..., None] ** np.arange(self.N)
        return np.einsum("...i,ij,...j->...", zp, self.coeffs, wp)

    def slice_w(self, z0: complex) -> np.ndarray:
        """Coefficients (ascending in ``w``) of ``P(z0, w)``."""
        return (complex(z0) ** np.arange(self.N)) @ self.coeffs


def bezoutian_build(foci, tol: float = DEFAULT_TOL) -> BezoutianP:
    """Coefficient array of the Bezoutian form for foci of any modulus.

    Each monomial pair of the numerator is divided by ``w - z`` in closed
    form, ``(w^h z^l - z^h w^l)/(w - z) = (zw)^l sum_t w^t z^(h-l-1-t)``,
    so the quotient is exact and bitwise symmetric. The product
    ``(w - z) P`` is compared against the numerator as a guard.
    """
    f = np.asarray(foci, dtype=complex).ravel()
    phi = monic_from_foci(f).coeffs
    deg = phi.size - 1
    N = deg + 1
    a = np.concatenate([[0], phi])  # w Phi(w)
    b = cpoly.reverse(phi, deg).coeffs
    b = np.pad(b, (0, N + 1 - b.size))
    P = np.zeros((N, N), dtype=complex)
    for lo in range(N + 1):
        for hi in range(lo + 1, N + 1):
            c = a[hi] * b[lo] - a[lo] * b[hi]
            if c == 0:
                continue
            d = hi - lo
            for t in range(d):
                P[lo + d - 1 - t, lo + t] += c
    if not np.array_equal(P, P.T):
        raise AssertionError("Bezoutian lost symmetry")
    # guard: (w - z) P == numerator
    num = np.zeros((N + 1, N + 1), dtype=complex)
    num[:, :] += np.outer(b, a)          # Phi*(z) * w Phi(w): [z^i, w^j]
    num[:, :] -= np.outer(a, b)          # z Phi(z) * Phi*(w)
    back = np.zeros_like(num)
    back[:N, 1:] += P
    back[1:, :N] -= P
    scale = max(1.0, np.max(np.abs(num)))
    if np.max(np.abs(back - num)) > 1e3 * tol * scale:
        raise ArithmeticError("Bezoutian division residual too large")
    mod = np.abs(f)
    d_cnt = int(np.sum(np.abs(mod - 1) <= ON_CIRCLE_TOL))
    m_cnt = int(np.sum(mod > 1 + ON_CIRCLE_TOL))
    P.setflags(write=False)
    return BezoutianP(P, f, m_cnt, d_cnt)


class CircleSolutions(NamedTuple):
    count: int
    on_circle: np.ndarray
    off_circle: np.ndarray
    expected: int
    z0: complex


def on_circle_solutions(P: BezoutianP, z0: complex, tol: float = ON_CIRCLE_TOL) -> CircleSolutions:
    """Roots of ``w -> P(z0, w)`` split into points on and off the unit circle.

    ``expected`` is ``N - 1 - 2m - d``, the count guaranteed when Mirman's
    condition holds. If ``z0`` annihilates the leading ``w`` coefficient it
    is nudged by 1e-9 radians with a warning.
    """
    z0 = _unit(z0)
    c = P.slice_w(z0)
    if abs(c[-1]) <= 1e-12 * max(1.0, np.max(np.abs(c))):
        warnings.warn("z0 is a root of the leading coefficient; perturbing by 1e-9 rad", RuntimeWarning, stacklevel=2)
        z0 = z0 * np.exp(1e-9j)
        c = P.slice_w(z0)
    r = cpoly.roots(c) if P.N > 1 else np.zeros(0, complex)
    on = np.abs(np.abs(r) - 1) <= tol
    return CircleSolutions(int(on.sum()), sort_on_circle(r[on]), r[~on], P.N - 1 - 2 * P.m - P.d, complex(z0))


def tangent_chords(P: BezoutianP, z0s):
    """All chords ``[z0, w]`` with ``P(z0, w) = 0`` and ``w`` on the circle."""
    out = []
    for z0 in np.atleast_1d(z0s):
        sol = on_circle_solutions(P, complex(z0))
        out.extend((sol.z0, complex(w)) for w in sol.on_circle)
    return out


def mirman_value(foci, z):
    """``1 + sum_j (1 - |f_j|^2) / |z - f_j|^2`` at points ``z`` of the circle."""
    z = np.asarray(z, dtype=complex)
    out = np.ones(z.shape)
    for f in np.asarray(foci, dtype=complex).ravel():
        out = out + (1 - abs(f) ** 2) / np.abs(z - f) ** 2
    return out


def mirman_condition(foci, samples: int = 720):
    """Whether Mirman's positivity condition holds on the circle, and the sampled minimum.

    Sampled at ``samples`` equally spaced points plus ``f/|f|`` for every
    focus outside the closed disk (where the negative terms peak).
    """
    f = np.asarray(foci, dtype=complex).ravel()
    if np.any(np.abs(np.abs(f) - 1) <= ON_CIRCLE_TOL):
        raise ValueError("a focus lies on the unit circle")
    ext = f[np.abs(f) > 1]
    z = np.concatenate([np.exp(TWO_PI * 1j * np.arange(samples) / samples), ext / np.abs(ext)])
    v = mirman_value(f, z)
    mn = float(v.min())
    return mn > 0, mn


def component_rank(n: int, k: int):
    """``(n / gcd(k, n), k / gcd(k, n))``: Poncelet rank and turning number of ``C_k``."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n - 1")
    g = math.gcd(k, n)
    return n // g, k // g


def totient_count(n: int, d: int) -> int:
    """Number of ``k`` in ``1..n//2`` whose curve ``C_k`` has rank ``d`` (by enumeration)."""
    if d < 3 or n % d:
        raise ValueError("d must be a divisor of n with d >= 3")
    return sum(1 for k in range(1, n // 2 + 1) if n // math.gcd(k, n) == d)


def sample_package(fam: PonceletFamily, samples: int = 720) -> list[CurveSample]:
    """Envelope points and chord poles of ``C_1 .. C_{n//2}`` at equally spaced ``theta``.

    ``C_{n-k}`` is the same curve as ``C_k`` and is not sampled again. Output
    is ordered by ``(k, theta)``.
    """
    th = TWO_PI * np.arange(samples) / samples
    z = np.exp(1j * th)
    out = []
    for k in range(1, fam.n // 2 + 1):
        w = np.exp(1j * advance(fam, th, k))
        pts = _envelope(fam, th, k)
        for j in range(samples):
            out.append(CurveSample(k, float(th[j]), complex(pts[j]), pole_of_chord(z[j], w[j])))
    return out


def zero_foci_quartic(a: float, u, v):
    """Dual-curve polynomial ``g(u, v)`` for foci ``{0, 0, 0, a}``, real ``a``.

    Obtained by writing ``P(z, w) = h(z + w, zw)`` and substituting
    ``z + w = 2/conj(zeta)``, ``zw = zeta/conj(zeta)``, ``zeta = u + iv``, then
    clearing ``conj(zeta)^4``. Poles ``zeta`` of tangent chords are its zeros.

    Returns ``(g, scale)`` where ``scale`` is the sum of the absolute values
    of the individual monomial terms (for relative residuals).
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    A = a * a - 1
    terms = [
        A * v**4,
        2 * A * u**2 * v**2,
        -8 * a * u * v**2,
        2 * (6 - 2 * a * a) * v**2,
        A * u**4,
        -8 * a * u**3,
        (12 - 4 * a * a) * u**2,
        16 * a * u,
        -16 * np.ones_like(u),
    ]
    g = sum(terms)
    scale = sum(np.abs(t) for t in terms)
    return g, scale
