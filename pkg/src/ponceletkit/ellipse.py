"""Ellipses inscribed in the unit circle: the tangent-chord form ``q``, Mirman's
circular and inner iterations, closure semiaxes and package factorization.

For an ellipse with foci ``f1, f2`` in the disk and minor semiaxis ``s``, the
chord ``[z, w]`` of the circle is tangent to it exactly when

    q(z, w) = (w + b1(z; f1)) (w + b1(z; f2)) - 4 s^2 z w / Phi2*(z) = 0,

with ``b1(z; f) = (z - f)/(1 - conj(f) z)`` and
``Phi2*(z) = (1 - conj(f1) z)(1 - conj(f2) z)``. As a quadratic in ``w`` the
product of its roots is ``b1(z; f1) b1(z; f2)`` and their sum is ``-S(z)``
with ``S`` given by :func:`_root_sum`.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import optimize

from ._config import ON_CIRCLE_TOL
from .numrange import EllipseComponent
from .poncelet import PonceletFamily, advance, bezoutian_build

__all__ = [
    "EllipseComponent",
    "Orbit",
    "Factorization",
    "b1",
    "ellipse_points",
    "max_modulus",
    "q_eval",
    "q_cleared",
    "circular_iteration",
    "inner_iteration",
    "closure_semiaxis",
    "package_factor",
    "package_from_ellipse",
]

TWO_PI = 2 * np.pi
SEPARATION = 1e-6
VIETA_TOL = 1e-9


def b1(z, f):
    """Disk automorphism ``(z - f)/(1 - conj(f) z)``."""
    return (z - f) / (1 - np.conj(f) * z)


def _phi2_star(z, f1, f2):
    return (1 - np.conj(f1) * z) * (1 - np.conj(f2) * z)


def _check(e: EllipseComponent):
    if abs(e.f1) >= 1 or abs(e.f2) >= 1:
        raise ValueError("ellipse foci must lie in the open unit disk")
    if e.s == 0 and abs(e.f1 - e.f2) > 1e-12:
        raise ValueError("s = 0 requires f1 == f2 (degenerate point)")


def ellipse_points(e: EllipseComponent, t) -> np.ndarray:
    """Boundary points ``c + u (A cos t + i s sin t)`` of the ellipse."""
    t = np.asarray(t, dtype=float)
    c = 0.5 * (e.f1 + e.f2)
    d = e.f2 - e.f1
    u = d / abs(d) if abs(d) > 0 else 1.0
    return c + u * (e.major * np.cos(t) + 1j * e.s * np.sin(t))


def max_modulus(e: EllipseComponent) -> float:
    """Largest ``|p|`` over the ellipse; it lies in the closed disk iff this is at most 1."""
    t = TWO_PI * np.arange(512) / 512
    r = np.abs(ellipse_points(e, t))
    i = int(np.argmax(r))
    h = TWO_PI / 512
    res = optimize.minimize_scalar(
        lambda x: -abs(ellipse_points(e, x)), bounds=(t[i] - h, t[i] + h), method="bounded", options={"xatol": 1e-12}
    )
    return float(max(r[i], -res.fun))


def _root_sum(z, e: EllipseComponent):
    # sum of the two roots w of q(z, .) = 0
    return -(b1(z, e.f1) + b1(z, e.f2)) + 4 * e.s**2 * z / _phi2_star(z, e.f1, e.f2)


def q_eval(z, w, e: EllipseComponent):
    """``q(z, w)``; for the degenerate point ``s = 0`` this is ``w + b1(z; f1)``."""
    _check(e)
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    den = _phi2_star(z, e.f1, e.f2)
    if np.any(np.abs(den) < 1e-300):
        raise ZeroDivisionError("Phi2*(z) vanishes")
    if e.s == 0:
        return w + b1(z, e.f1)
    return (w + b1(z, e.f1)) * (w + b1(z, e.f2)) - 4 * e.s**2 * z * w / den


def q_cleared(z, w, e: EllipseComponent):
    """Polynomial form of ``q``: ``q * Phi2*(z)``, or ``(w + b1) (1 - conj(f) z)`` for a point."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if e.s == 0:
        return w * (1 - np.conj(e.f1) * z) + z - e.f1
    ta = w * (1 - np.conj(e.f1) * z) + z - e.f1
    tb = w * (1 - np.conj(e.f2) * z) + z - e.f2
    return ta * tb - 4 * e.s**2 * z * w


def _step_roots(z, e):
    # roots of w^2 - S(z) w + b2(z) = 0
    S = _root_sum(z, e)
    prod = b1(z, e.f1) * b1(z, e.f2)
    disc = np.sqrt(S * S - 4 * prod + 0j)
    return 0.5 * (S + disc), 0.5 * (S - disc), prod


def _ccw_root(z, e, roots):
    # the root whose chord from z keeps the ellipse centre on its left
    c = 0.5 * (e.f1 + e.f2)
    cross = [((np.conj(r - z)) * (c - z)).imag for r in roots]
    return roots[int(np.argmax(cross))]


class _OffCircle(ArithmeticError):
    pass


class Orbit(list):
    """Orbit of the circular iteration; ``n`` is the closure length or ``None``."""

    n: int | None = None


def circular_iteration(e: EllipseComponent, w0: complex = 1.0, max_steps: int = 64, tol: float = 1e-8) -> Orbit:
    """Mirman's circular iteration from ``w0`` on the unit circle.

    Each step solves ``q(w_i, .) = 0`` and keeps the root farther from
    ``w_{i-1}``; the first step goes counter-clockwise. The returned orbit
    ``[w_0, ..., w_{n-1}]`` carries ``n``, the first index with
    ``|w_n - w_0| <= tol`` (``None`` if there is none within ``max_steps``).

    Raises
    ------
    ArithmeticError
        An iterate leaves the circle (no inscribed ellipse with these
        parameters), the two roots nearly coincide, or the Vieta identity
        ``w_{i+1} w_{i-1} = b2(w_i)`` fails.
    """
    _check(e)
    if e.s <= 0:
        raise ValueError("circular iteration needs s > 0")
    w0 = complex(w0)
    if abs(abs(w0) - 1) > 1e-9:
        raise ValueError("w0 must lie on the unit circle")
    if max_modulus(e) >= 1:
        raise ArithmeticError("ellipse is not inside the unit disk")
    orbit = Orbit([w0])
    prev = None
    cur = w0
    for _ in range(max_steps):
        r1, r2, prod = _step_roots(cur, e)
        if abs(r1 - r2) < SEPARATION:
            raise ArithmeticError(f"tangent chord from {cur}: roots coincide")
        if prev is None:
            nxt = _ccw_root(cur, e, (r1, r2))
        else:
            nxt = r1 if abs(r1 - prev) >= abs(r2 - prev) else r2
            if abs(nxt * prev - prod) > VIETA_TOL:
                raise ArithmeticError(f"Vieta identity violated by {abs(nxt * prev - prod):.3g}")
        if abs(abs(nxt) - 1) > ON_CIRCLE_TOL:
            raise _OffCircle(f"iterate {nxt} left the unit circle")
        if abs(nxt - w0) <= tol:
            orbit.n = len(orbit)
            return orbit
        orbit.append(complex(nxt))
        prev, cur = cur, nxt
    return orbit


def _turning(e, n):
    # total counter-clockwise angle swept by n circular steps from 1
    prev, cur, total = None, 1.0 + 0j, 0.0
    for _ in range(n):
        r1, r2, _ = _step_roots(cur, e)
        if prev is None:
            nxt = _ccw_root(cur, e, (r1, r2))
        else:
            nxt = r1 if abs(r1 - prev) >= abs(r2 - prev) else r2
        if abs(abs(nxt) - 1) > ON_CIRCLE_TOL or abs(r1 - r2) < 1e-14:
            raise _OffCircle
        total += np.angle(nxt / cur) % TWO_PI
        prev, cur = cur, nxt
    return total


def closure_semiaxis(f1: complex, f2: complex, n: int, xtol: float = 1e-15) -> float:
    """Minor semiaxis ``s`` making the ellipse with foci ``f1, f2`` ``n``-Poncelet.

    Bisection on ``s`` for the condition that ``n`` circular steps from
    ``w0 = 1`` sweep exactly one turn. The swept angle decreases as the
    (confocal) ellipse grows; ellipses leaving the disk count as too large.
    For ``n = 3`` the result is compared with the closed form
    ``s^2 = (1 - |f1|^2 - |f2|^2 + |f1 f2|^2) / 4``.
    """
    f1, f2 = complex(f1), complex(f2)
    if n < 3:
        raise ValueError("n must be at least 3")
    if abs(f1) >= 1 or abs(f2) >= 1:
        raise ValueError("foci must lie in the open unit disk")

    def excess(s):
        try:
            return _turning(EllipseComponent(f1, f2, s), n) - TWO_PI
        except _OffCircle:
            return -1.0

    # largest s keeping the ellipse inside the disk
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if max_modulus(EllipseComponent(f1, f2, mid)) < 1:
            lo = mid
        else:
            hi = mid
    lo, hi = 1e-6, lo
    if excess(lo) <= 0:
        raise ArithmeticError("no closing semiaxis: bracket invalid at s -> 0")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if excess(mid) > 0:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    if n == 3:
        ref = 0.5 * math.sqrt(max(0.0, 1 - abs(f1) ** 2 - abs(f2) ** 2 + abs(f1 * f2) ** 2))
        if abs(s - ref) > 1e-8:
            raise ArithmeticError(f"closure bisection {s} disagrees with the n = 3 formula {ref}")
    return s


def inner_iteration(e: EllipseComponent, branch: int = 0, n: int | None = None, tol: float = 1e-9) -> list[complex]:
    """Inner Mirman iteration: the foci ``w_1 .. w_{n-1}`` of the ambient package.

    Starts from ``w_0 = 0`` and ``w_1 = f1`` (``branch=0``) or ``f2``
    (``branch=1``) and continues with the root-sum rule
    ``w_{i+1} = S(w_i) - w_{i-1}``, which picks the root of ``q(w_i, .)``
    other than ``w_{i-1}``. The length ``n`` is taken from the closure of
    the circular iteration when not given; the sequence must then return to
    ``0`` at step ``n``.
    """
    _check(e)
    if e.s == 0:
        return [complex(e.f1)]
    if n is None:
        n = circular_iteration(e).n
        if n is None:
            raise ArithmeticError("circular iteration does not close; rotation number may be irrational")
    start = (e.f1, e.f2)[branch]
    ws = [0j, complex(start)]
    for _ in range(n - 1):
        nxt = complex(_root_sum(ws[-1], e) - ws[-2])
        ws.append(nxt)
    if abs(ws[n]) > tol * max(1.0, max(abs(w) for w in ws)):
        raise ArithmeticError(f"inner iteration did not return to 0 after {n} steps (|w_n| = {abs(ws[n]):.3g})")
    foci = ws[1:n]
    if any(abs(w) >= 1 for w in foci):
        raise ArithmeticError("inner iterate left the disk")
    return foci


def package_from_ellipse(f1: complex, f2: complex, n: int) -> tuple[EllipseComponent, list[complex]]:
    """The ``n``-Poncelet ellipse with foci ``f1, f2`` and the foci of its package."""
    e = EllipseComponent(complex(f1), complex(f2), closure_semiaxis(f1, f2, n))
    return e, inner_iteration(e, n=n)


class Factorization(list):
    """Components ``C_1 .. C_{n//2}`` with the fitted constant and the residual."""

    constant: complex = 1.0
    residual: float = math.inf


def _s2_from_chord(z, w, fa, fb):
    return (w + b1(z, fa)) * (w + b1(z, fb)) * _phi2_star(z, fa, fb) / (4 * z * w)


def package_factor(foci, samples: int = 100, seed: int = 0, tol: float = 1e-7) -> Factorization:
    """Split the package of ``foci`` into its ellipse components.

    For each ``k`` the pair of foci belonging to ``C_k`` is the one for which
    ``s_k^2`` recovered from the chords ``[z, tau^k(z)]`` at two sample
    points is real, positive and the same at both. For even ``n`` the last
    component is the point ``f`` with ``tau^{n/2}(z) = -b1(z; f)``.

    The result carries ``residual``: the largest ``|P - c prod_k Q_k|``
    relative to ``max |P|`` over ``samples`` random pairs on the torus, where
    ``Q_k`` is the polynomial form of ``q_k`` and ``c`` is fitted at one point.
    """
    f = np.asarray(foci, dtype=complex).ravel()
    fam = PonceletFamily.from_foci(f)
    n = fam.n
    th = np.array([0.3, 2.1])
    z = np.exp(1j * th)
    free = list(range(f.size))
    comps = Factorization()
    for k in range(1, n // 2 + 1):
        w = np.exp(1j * advance(fam, th, k))
        if 2 * k == n:
            best = min(free, key=lambda i: np.max(np.abs(w + b1(z, f[i]))))
            err = np.max(np.abs(w + b1(z, f[best])))
            if err > 1e-7:
                raise ArithmeticError(f"C_{k}: no focus on all diameters-through-a-point chords (err {err:.3g})")
            comps.append(EllipseComponent(complex(f[best]), complex(f[best]), 0.0))
            free.remove(best)
            continue
        found = None
        score = math.inf
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                i, j = free[a], free[b]
                s2 = _s2_from_chord(z, w, f[i], f[j])
                bad = max(abs(s2[0] - s2[1]), abs(s2[0].imag), abs(s2[1].imag)) / max(abs(s2[0]), 1e-300)
                if s2[0].real > 0 and bad < score:
                    found, score = (i, j, float(np.mean(s2.real))), bad
        if found is None or score > 1e-7:
            raise ArithmeticError(f"C_{k} is not an ellipse with foci among the inputs (mismatch {score:.3g})")
        i, j, s2 = found
        comps.append(EllipseComponent(complex(f[i]), complex(f[j]), math.sqrt(s2)))
        free.remove(i)
        free.remove(j)
    P = bezoutian_build(f)
    rng = np.random.default_rng(seed)
    zs = np.exp(TWO_PI * 1j * rng.random(samples))
    ws = np.exp(TWO_PI * 1j * rng.random(samples))
    lhs = P(zs, ws)
    rhs = np.ones(samples, dtype=complex)
    for e in comps:
        rhs = rhs * q_cleared(zs, ws, e)
    i0 = int(np.argmax(np.abs(rhs)))
    c = lhs[i0] / rhs[i0]
    comps.constant = complex(c)
    comps.residual = float(np.max(np.abs(lhs - c * rhs)) / np.max(np.abs(lhs)))
    if comps.residual > tol:
        raise ArithmeticError(f"factorization residual {comps.residual:.3g} exceeds {tol:.1g}")
    return comps
