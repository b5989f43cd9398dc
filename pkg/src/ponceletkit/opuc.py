"""Szegő recursion, Verblunsky coefficients and paraorthogonal polynomials."""

from __future__ import annotations

import numpy as np

from . import cpoly
from ._config import DEFAULT_TOL
from .cpoly import ComplexPoly

__all__ = [
    "monic_from_foci",
    "szego_step",
    "szego_chain",
    "verblunsky_from_poly",
    "popuc",
    "paraorthogonal_extension",
    "wendroff_recover",
    "sort_on_circle",
]


def monic_from_foci(foci) -> ComplexPoly:
    """``prod_j (z - f_j)``; the empty product is the constant 1."""
    return cpoly.from_roots(np.asarray(foci, dtype=complex).ravel())


def szego_step(phi, alpha: complex):
    """One forward step of the Szegő recursion.

    Returns ``(Phi_{k+1}, Phi*_{k+1})`` where ``Phi_{k+1} = z Phi_k - conj(alpha) Phi*_k``
    and ``Phi*_{k+1} = -alpha z Phi_k + Phi*_k``. Unimodular ``alpha`` is allowed
    (the paraorthogonal terminal step).
    """
    if abs(alpha) > 1 + DEFAULT_TOL:
        raise ValueError(f"|alpha| = {abs(alpha)} > 1")
    phi = ComplexPoly(phi)
    k = phi.degree
    star = cpoly.reverse(phi, k)
    zphi = phi.shift(1)
    nxt = zphi - np.conj(alpha) * star
    nxt_star = star - alpha * zphi
    return nxt, nxt_star


def szego_chain(alphas) -> ComplexPoly:
    """``Phi_n`` generated from ``Phi_0 = 1`` by the given coefficients."""
    phi = ComplexPoly([1])
    for a in np.asarray(alphas, dtype=complex).ravel():
        phi, _ = szego_step(phi, a)
    return phi


def verblunsky_from_poly(phi, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Run the Szegő recursion backwards from a monic ``Phi_n``.

    Each step reads ``alpha_k = -conj(Phi_{k+1}(0))`` and forms
    ``(Phi_{k+1} + conj(alpha_k) Phi*_{k+1}) / (1 - |alpha_k|**2)``, whose
    constant term vanishes; the division by ``z`` is a coefficient shift.

    Raises
    ------
    ValueError
        If ``phi`` is not monic, a coefficient reaches the closed unit circle
        (a zero on or outside the circle), or a downdate leaves a constant
        term above ``tol``.
    """
    phi = ComplexPoly(phi)
    n = phi.degree
    if not np.isclose(phi.coeffs[-1], 1, rtol=0, atol=tol):
        raise ValueError("polynomial must be monic")
    alphas = np.zeros(n, dtype=complex)
    cur = phi.coeffs.copy()
    cur[-1] = 1.0
    for k in range(n - 1, -1, -1):
        a = -np.conj(cur[0])
        if abs(a) >= 1 - tol:
            raise ValueError(f"|alpha_{k}| = {abs(a):.6g} is not < 1; a zero lies on or outside the unit circle")
        alphas[k] = a
        star = np.conj(cur[::-1])
        down = (cur + np.conj(a) * star) / (1 - abs(a) ** 2)
        if abs(down[0]) > tol * max(1.0, np.max(np.abs(cur))) * (k + 2):
            raise ValueError(f"inexact downdate at step {k}: residual {abs(down[0]):.3g}")
        cur = down[1:]
        cur[-1] = 1.0
    return alphas


def popuc(phi, lam: complex, tol: float = DEFAULT_TOL) -> ComplexPoly:
    """Paraorthogonal polynomial ``z Phi(z) - conj(lam) Phi*(z)`` for unimodular ``lam``."""
    if abs(abs(lam) - 1) > 1e3 * tol:
        raise ValueError(f"|lambda| = {abs(lam)} is not 1")
    out, _ = szego_step(phi, lam)
    return out


def sort_on_circle(points) -> np.ndarray:
    """Sort by principal argument in ``[0, 2*pi)``; stable, so ties keep input order.

    Angles within 1e-12 below ``2*pi`` count as 0, so ``1 - 1e-16j`` sorts first.
    """
    pts = np.asarray(points, dtype=complex)
    ang = np.mod(np.angle(pts), 2 * np.pi)
    ang[ang > 2 * np.pi - 1e-12] = 0.0
    return pts[np.argsort(ang, kind="stable")]


def paraorthogonal_extension(foci, lam: complex, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The ``n = len(foci) + 1`` zeros of the paraorthogonal polynomial.

    Solved through the Blaschke product ``z Phi(z)/Phi*(z) = conj(lam)``, whose
    lifted argument is strictly increasing; every returned point is checked
    against the polynomial itself.
    """
    from . import blaschke  # local: blaschke imports this module

    foci = np.asarray(foci, dtype=complex).ravel()
    if np.any(np.abs(foci) >= 1):
        raise ValueError("all foci must lie in the open unit disk")
    B = blaschke.from_foci(foci)
    pts = blaschke.solve(B, lam)
    poly = popuc(monic_from_foci(foci), lam, tol)
    scale = np.sum(np.abs(poly.coeffs))
    resid = np.abs(cpoly.eval(poly, pts))
    if np.any(np.abs(np.abs(pts) - 1) > 1e3 * tol) or np.any(resid > 1e4 * tol * scale):
        raise ArithmeticError("paraorthogonal zeros failed verification")
    return sort_on_circle(pts)


def wendroff_recover(z1, lam1: complex, z2, lam2: complex, tol: float = 1e-8) -> ComplexPoly:
    """Recover ``Phi_{n-1}`` from two paraorthogonal zero sets.

    With ``P_i`` monic with zeros ``Z_i``::

        z Phi   = (conj(l2) P_1 - conj(l1) P_2) / (conj(l2) - conj(l1))
        Phi*    = (P_1 - P_2) / (conj(l2) - conj(l1))

    Both must agree (``Phi*`` is the reversal of ``Phi``), otherwise the sets
    do not come from a common ``Phi_{n-1}`` and ``ValueError`` is raised.
    """
    if abs(lam1 - lam2) <= 1e-12:
        raise ValueError("lambda values must differ")
    z1 = np.asarray(z1, dtype=complex).ravel()
    z2 = np.asarray(z2, dtype=complex).ravel()
    if z1.size != z2.size:
        raise ValueError("point sets must have the same size")
    n = z1.size
    p1 = cpoly.from_roots(z1).coeffs
    p2 = cpoly.from_roots(z2).coeffs
    den = np.conj(lam2) - np.conj(lam1)
    zphi = (np.conj(lam2) * p1 - np.conj(lam1) * p2) / den
    star = (p1 - p2) / den
    if abs(zphi[0]) > tol:
        raise ValueError("recovered z*Phi has a nonzero constant term")
    phi = zphi[1:]
    pad = np.zeros(n + 1, dtype=complex)
    pad[: star.size] = star
    # the leading coefficients of P_1 and P_2 cancel, so Phi* has degree <= n - 1
    if abs(pad[n]) > tol or np.max(np.abs(np.conj(phi[::-1]) - pad[:n])) > tol * n:
        raise ValueError("inconsistent point sets: Phi and Phi* do not match")
    phi = phi.copy()
    phi[-1] = 1.0
    return ComplexPoly(phi)
