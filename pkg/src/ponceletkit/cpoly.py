"""Dense complex polynomials in the monomial basis.

Coefficient ``j`` of a :class:`ComplexPoly` multiplies ``z**j`` (ascending
order, the same convention as :mod:`numpy.polynomial.polynomial`).
"""

from __future__ import annotations

import numpy as np

from ._config import DEFAULT_TOL

__all__ = [
    "ComplexPoly",
    "RootFindingError",
    "as_coeffs",
    "eval",
    "reverse",
    "roots",
    "interpolate",
    "from_roots",
]


class RootFindingError(ArithmeticError):
    """Raised when the simultaneous root iteration does not converge."""


class ComplexPoly:
    """Polynomial with complex coefficients, ascending order.

    The zero polynomial is ``ComplexPoly([0])``; an empty coefficient list is
    rejected. Trailing zeros are trimmed so that ``degree`` is the index of
    the last nonzero coefficient.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        if isinstance(coeffs, ComplexPoly):
            coeffs = coeffs.coeffs
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("empty coefficient list")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite coefficient")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1]
        c.setflags(write=False)
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return self._c.size - 1

    @property
    def is_monic(self) -> bool:
        return self._c[-1] == 1

    def __call__(self, z):
        return eval(self, z)

    def __len__(self):
        return self._c.size

    def __eq__(self, other):
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.all(self._c == other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def __add__(self, other):
        return ComplexPoly(np.polynomial.polynomial.polyadd(self._c, as_coeffs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return ComplexPoly(np.polynomial.polynomial.polysub(self._c, as_coeffs(other)))

    def __rsub__(self, other):
        return ComplexPoly(np.polynomial.polynomial.polysub(as_coeffs(other), self._c))

    def __mul__(self, other):
        if np.isscalar(other):
            return ComplexPoly(self._c * other)
        return ComplexPoly(np.polynomial.polynomial.polymul(self._c, as_coeffs(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexPoly(-self._c)

    def shift(self, k: int = 1) -> "ComplexPoly":
        """Multiply by ``z**k``."""
        return ComplexPoly(np.concatenate([np.zeros(k, dtype=complex), self._c]))

    def allclose(self, other, atol=1e-12) -> bool:
        a, b = self._c, as_coeffs(other)
        m = max(a.size, b.size)
        a = np.pad(a, (0, m - a.size))
        b = np.pad(b, (0, m - b.size))
        return bool(np.max(np.abs(a - b)) <= atol)

    def __repr__(self):
        return f"ComplexPoly({self._c.tolist()!r})"


def as_coeffs(p) -> np.ndarray:
    if isinstance(p, ComplexPoly):
        return p.coeffs
    if np.isscalar(p):
        return np.array([p], dtype=complex)
    return np.asarray(p, dtype=complex).ravel()


def eval(p, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    c = as_coeffs(p)
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, c[-1], dtype=complex)
    for a in c[-2::-1]:
        out = out * z + a
    return out[()] if out.ndim == 0 else out


def reverse(p, n: int) -> ComplexPoly:
    """Reversed polynomial ``z**n * conj(p(1/conj(z)))``.

    Requires ``degree(p) <= n``. The result may have degree below ``n``.
    """
    c = ComplexPoly(p).coeffs
    if c.size - 1 > n:
        raise ValueError(f"degree {c.size - 1} exceeds reversal order {n}")
    full = np.zeros(n + 1, dtype=complex)
    full[: c.size] = c
    return ComplexPoly(np.conj(full[::-1]))


def from_roots(zs) -> ComplexPoly:
    """Monic polynomial with the given roots (repetitions allowed)."""
    c = np.array([1.0 + 0j])
    for r in np.asarray(zs, dtype=complex).ravel():
        c = np.concatenate([[0], c]) - r * np.concatenate([c, [0]])
    return ComplexPoly(c)


def _aberth(c: np.ndarray, tol: float, maxiter: int, rng) -> np.ndarray:
    n = c.size - 1
    dc = c[1:] * np.arange(1, n + 1)
    radius = 1.0 + np.max(np.abs(c[:-1] / c[-1]))
    # Initial guesses: circle of radius 1 + max|c_j|, randomly rotated and jittered.
    angles = 2 * np.pi * (np.arange(n) + rng.uniform(0.1, 0.9, n)) / n + rng.uniform(0, 2 * np.pi)
    z = radius * rng.uniform(0.5, 1.0, n) * np.exp(1j * angles)
    done = np.zeros(n, dtype=bool)
    scale = np.abs(c)
    for _ in range(maxiter):
        p = eval(c, z)
        bound = tol * eval(scale, np.abs(z)).real
        done |= np.abs(p) <= bound
        if done.all():
            return z
        dp = eval(dc, z)
        ratio = np.where(dp != 0, p / np.where(dp == 0, 1, dp), 1.0)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        w = ratio / (1.0 - ratio * s)
        w[done] = 0.0
        z = z - w
        if np.all(np.abs(w) <= 4 * np.finfo(float).eps * (1 + np.abs(z))):
            return z
    raise RootFindingError(f"Aberth iteration did not converge in {maxiter} steps")


def _newton_polish(c: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    dc = c[1:] * np.arange(1, c.size)
    for _ in range(steps):
        p = eval(c, z)
        dp = eval(dc, z)
        ok = dp != 0
        step = np.zeros_like(z)
        step[ok] = p[ok] / dp[ok]
        # Keep the polished value only where it lowers the residual.
        z_new = z - step
        better = np.abs(eval(c, z_new)) < np.abs(p)
        z = np.where(better, z_new, z)
    return z


def roots(p, tol: float = DEFAULT_TOL, maxiter: int = 800, seed: int = 0) -> np.ndarray:
    """All roots of ``p`` with multiplicity.

    Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
    Exact zero trailing coefficients are split off as roots at the origin.
    The random start is seeded, so results are deterministic.

    Raises
    ------
    ValueError
        If ``degree(p) < 1``.
    RootFindingError
        If the iteration fails to converge.
    """
    c = ComplexPoly(p).coeffs
    if c.size < 2:
        raise ValueError("roots() needs degree >= 1")
    k = int(np.flatnonzero(c)[0])
    zeros = np.zeros(k, dtype=complex)
    c = c[k:]
    if c.size == 1:
        return zeros
    if c.size == 2:
        return np.concatenate([zeros, [-c[0] / c[1]]])
    rng = np.random.default_rng(seed)
    z = _aberth(c, tol, maxiter, rng)
    z = _newton_polish(c, z)
    return np.concatenate([zeros, z])


def interpolate(points, degree: int) -> ComplexPoly:
    """Newton divided-difference interpolant through ``(node, value)`` pairs.

    Exactly ``degree + 1`` nodes are used (the first ones given); any extra
    samples must be matched by the result and are checked.
    """
    pts = list(points)
    if len(pts) < degree + 1:
        raise ValueError(f"need at least {degree + 1} samples, got {len(pts)}")
    x = np.array([p[0] for p in pts], dtype=complex)
    y = np.array([p[1] for p in pts], dtype=complex)
    if np.unique(x).size != x.size:
        raise ValueError("duplicate interpolation nodes")
    xs, ys = x[: degree + 1], y[: degree + 1].copy()
    m = degree + 1
    for j in range(1, m):
        ys[j:] = (ys[j:] - ys[j - 1 : -1]) / (xs[j:] - xs[: m - j])
    # Horner-style expansion of the Newton form into monomials.
    c = np.array([ys[-1]])
    for j in range(m - 2, -1, -1):
        c = np.concatenate([[0], c]) - xs[j] * np.concatenate([c, [0]])
        c[0] += ys[j]
    out = ComplexPoly(c)
    if x.size > m:
        resid = np.abs(eval(out, x[m:]) - y[m:])
        scale = 1 + np.abs(y[m:])
        if np.any(resid > 1e-8 * scale):
            raise ValueError("extra samples are inconsistent with the requested degree")
    return out
