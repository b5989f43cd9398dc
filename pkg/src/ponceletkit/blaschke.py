"""Finite Blaschke products ``Phi(z) / Phi*(z)`` and their level sets on the circle.

On the unit circle each factor ``(z - f)/(1 - conj(f) z)`` equals
``e^{i theta} u / conj(u)`` with ``u = 1 - f e^{-i theta}``. Since ``Re u > 0``
for ``|f| < 1``, the principal argument of ``u`` is already continuous and
the lifted argument of the product is available in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from . import cpoly
from .cpoly import ComplexPoly
from .opuc import monic_from_foci, sort_on_circle

__all__ = [
    "BlaschkeProduct",
    "from_zeros",
    "from_foci",
    "evaluate",
    "lifted_arg",
    "arg_derivative",
    "solve",
    "compose",
]

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class BlaschkeProduct:
    """Blaschke product, possibly a composition ``outer(inner(z))``.

    For a plain product ``zeros`` holds the zero multiset and ``parts`` is
    empty. For a composition, ``parts = (outer, inner)`` and ``zeros`` is
    filled on demand by :meth:`expand`.
    """

    zeros: np.ndarray
    parts: tuple = field(default=(), repr=False)

    @property
    def degree(self) -> int:
        if self.parts:
            return self.parts[0].degree * self.parts[1].degree
        return int(self.zeros.size)

    @property
    def numer(self) -> ComplexPoly:
        return monic_from_foci(self.expand().zeros)

    @property
    def denom(self) -> ComplexPoly:
        return cpoly.reverse(self.numer, self.degree)

    def __call__(self, z):
        return evaluate(self, z)

    def expand(self) -> "BlaschkeProduct":
        """Plain zero-list form of a composition.

        The zeros of ``outer(inner(z))`` are the preimages under ``inner`` of
        each zero ``g`` of ``outer``, i.e. the roots of
        ``Phi_in(z) - g Phi*_in(z)``.
        """
        if not self.parts:
            return self
        outer, inner = (p.expand() for p in self.parts)
        num = inner.numer
        den = cpoly.reverse(num, inner.degree)
        zs = []
        for g in outer.zeros:
            q = num - g * den
            zs.append(cpoly.roots(q) if q.degree > 0 else np.zeros(0, complex))
        return BlaschkeProduct(np.concatenate(zs) if zs else np.zeros(0, complex))


def from_zeros(zeros) -> BlaschkeProduct:
    z = np.array(zeros, dtype=complex).ravel()
    if np.any(np.abs(z) >= 1):
        raise ValueError("Blaschke zeros must lie in the open unit disk")
    z.setflags(write=False)
    return BlaschkeProduct(z)


def from_foci(foci) -> BlaschkeProduct:
    """Normalized product ``z Phi_{n-1}(z) / Phi*_{n-1}(z)`` of degree ``len(foci) + 1``."""
    f = np.asarray(foci, dtype=complex).ravel()
    return from_zeros(np.concatenate([[0j], f]))


def evaluate(B: BlaschkeProduct, z):
    if B.parts:
        outer, inner = B.parts
        return evaluate(outer, evaluate(inner, z))
    z = np.asarray(z, dtype=complex)
    out = np.ones(z.shape, dtype=complex)
    for f in B.zeros:
        out = out * (z - f) / (1 - np.conj(f) * z)
    return out[()] if out.ndim == 0 else out


def _lift_closed(B: BlaschkeProduct, theta):
    th = np.asarray(theta, dtype=float)
    if B.parts:
        outer, inner = B.parts
        # inner's lift is continuous; outer is lifted along it.
        return _lift_closed(outer, _lift_closed(inner, th))
    out = np.zeros(th.shape)
    e = np.exp(-1j * th)
    for f in B.zeros:
        out = out + th + 2 * np.angle(1 - f * e)
    return out


def _lift_unwrap(B: BlaschkeProduct, theta0: float, theta1: float, max_step: float = np.pi / 4):
    # Step so that each increment of arg B stays below max_step.
    th, total = theta0, 0.0
    val = evaluate(B, np.exp(1j * th))
    while th < theta1:
        h = min(theta1 - th, max_step / arg_derivative(B, np.exp(1j * th)))
        while True:
            nxt = evaluate(B, np.exp(1j * (th + h)))
            d = np.angle(nxt / val)
            if abs(d) <= max_step or h < 1e-12:
                break
            h /= 2
        th, total, val = th + h, total + d, nxt
    return total


def lifted_arg(B: BlaschkeProduct, theta, method: str = "closed", theta0: float = 0.0):
    """Continuous, strictly increasing lift of ``theta -> arg B(e^{i theta})``.

    ``method="closed"`` uses the per-factor formula and accepts arrays. The
    cross-check methods ``"unwrap"`` (adaptive stepping with argument jumps
    under pi/4) and ``"integrate"`` (quadrature of :func:`arg_derivative`)
    take a scalar ``theta`` and are anchored to the closed form at ``theta0``.
    Every method satisfies ``lift(theta + 2 pi) = lift(theta) + 2 pi * degree``.
    """
    if method == "closed":
        return _lift_closed(B, theta)
    base = float(_lift_closed(B, theta0))
    theta = float(theta)
    sign = 1.0 if theta >= theta0 else -1.0
    lo, hi = sorted((theta0, theta))
    if method == "unwrap":
        return base + sign * _lift_unwrap(B, lo, hi)
    if method == "integrate":
        val, _ = integrate.quad(
            lambda t: arg_derivative(B, np.exp(1j * t)), lo, hi, epsabs=1e-13, epsrel=1e-13, limit=400
        )
        return base + sign * val
    raise ValueError(f"unknown method {method!r}")


def arg_derivative(B: BlaschkeProduct, z, tol: float = 1e-9):
    """``d/dtheta arg B(e^{i theta})`` at ``z = e^{i theta}``.

    Equals ``sum_f (1 - |f|^2)/|z - f|^2`` over the zeros, so it is positive.
    For a composition the chain rule multiplies the two derivatives.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(np.abs(z) - 1) > tol):
        raise ValueError("arg_derivative is defined on the unit circle only")
    if B.parts:
        outer, inner = B.parts
        return arg_derivative(outer, evaluate(inner, z)) * arg_derivative(inner, z)
    out = np.zeros(z.shape)
    for f in B.zeros:
        out = out + (1 - abs(f) ** 2) / np.abs(z - f) ** 2
    return out[()] if out.ndim == 0 else out


def solve(B: BlaschkeProduct, lam: complex, xtol: float = 1e-13) -> np.ndarray:
    """The ``degree`` solutions of ``B(z) = conj(lam)``, sorted by argument.

    The lifted argument runs over ``[L0, L0 + 2 pi n)`` as theta runs over
    ``[0, 2 pi)``; each target level ``arg conj(lam) + 2 pi k`` in that range is
    bracketed and bisected, then refined by one Newton step in theta.
    """
    if abs(abs(lam) - 1) > 1e-9:
        raise ValueError(f"|lambda| = {abs(lam)} is not 1")
    n = B.degree
    lo_lift = float(_lift_closed(B, 0.0))
    target0 = np.angle(np.conj(lam))
    # Smallest level >= lo_lift congruent to target0.
    first = target0 + TWO_PI * np.ceil((lo_lift - target0) / TWO_PI)
    targets = first + TWO_PI * np.arange(n)
    lo = np.zeros(n)
    hi = np.full(n, TWO_PI)
    while np.max(hi - lo) > xtol:
        mid = 0.5 * (lo + hi)
        below = _lift_closed(B, mid) < targets
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    th = 0.5 * (lo + hi)
    th = th + (targets - _lift_closed(B, th)) / arg_derivative(B, np.exp(1j * th))
    return sort_on_circle(np.exp(1j * th))


def compose(outer: BlaschkeProduct, inner: BlaschkeProduct) -> BlaschkeProduct:
    """``outer(inner(z))`` kept unexpanded; call :meth:`BlaschkeProduct.expand` for zeros."""
    return BlaschkeProduct(np.zeros(0, complex), parts=(outer, inner))
