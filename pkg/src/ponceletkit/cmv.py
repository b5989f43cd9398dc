"""Cut-off CMV matrices, unitary dilations and class-S_n diagnostics."""

from __future__ import annotations

import numpy as np

from . import cpoly
from ._config import DEFAULT_TOL
from .cpoly import ComplexPoly

__all__ = [
    "theta_block",
    "cutoff_cmv",
    "unitary_dilation",
    "char_poly",
    "eigenvalues",
    "defect_rank",
    "operator_norm",
    "jordan_block",
    "matrix_to_json",
    "matrix_from_json",
]


def theta_block(alpha: complex) -> np.ndarray:
    """``[[conj(a), rho], [rho, -a]]`` with ``rho = sqrt(1 - |a|^2)``."""
    alpha = complex(alpha)
    if abs(alpha) > 1 + DEFAULT_TOL:
        raise ValueError(f"|alpha| = {abs(alpha)} > 1")
    rho = np.sqrt(max(0.0, 1 - abs(alpha) ** 2))
    return np.array([[np.conj(alpha), rho], [rho, -alpha]], dtype=complex)


def _direct_sum(size: int, blocks, offset: int) -> np.ndarray:
    out = np.eye(size, dtype=complex)
    for j, blk in enumerate(blocks):
        i = offset + 2 * j
        if i + 1 >= size:
            break
        out[i : i + 2, i : i + 2] = blk
    return out


def cutoff_cmv(alphas) -> np.ndarray:
    """Principal ``n x n`` block of the CMV matrix ``L M``.

    ``L = Theta_0 + Theta_2 + ...`` and ``M = 1 + Theta_1 + Theta_3 + ...`` are
    assembled as ``(n+2) x (n+2)`` truncations (coefficients past ``n - 1``
    set to zero), multiplied, and cut to ``n x n``. A unimodular last entry
    gives the unitary dilation.
    """
    a = np.asarray(alphas, dtype=complex).ravel()
    n = a.size
    if n == 0:
        raise ValueError("need at least one Verblunsky coefficient")
    if np.any(np.abs(a[:-1]) >= 1) or abs(a[-1]) > 1 + DEFAULT_TOL:
        raise ValueError("invalid Verblunsky coefficients")
    size = n + 2
    full = np.concatenate([a, np.zeros(2, complex)])
    thetas = [theta_block(x) for x in full]
    L = _direct_sum(size, thetas[0::2], 0)
    M = _direct_sum(size, thetas[1::2], 1)
    return (L @ M)[:n, :n]


def unitary_dilation(alphas, lam: complex) -> np.ndarray:
    """Cut-off CMV matrix of ``(alpha_0, ..., alpha_{n-2}, lam)`` with ``|lam| = 1``."""
    if abs(abs(lam) - 1) > 1e-9:
        raise ValueError(f"|lambda| = {abs(lam)} is not 1")
    a = np.asarray(alphas, dtype=complex).ravel()
    return cutoff_cmv(np.concatenate([a, [lam]]))


def char_poly(M) -> ComplexPoly:
    """``det(z I - M)`` from LU determinants at ``n + 1`` points of the circle ``|z| = 2``."""
    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("matrix must be square")
    nodes = 2 * np.exp(2j * np.pi * (np.arange(n + 1) + 0.5) / (n + 1))
    eye = np.eye(n)
    vals = [np.linalg.det(z * eye - M) for z in nodes]
    p = cpoly.interpolate(zip(nodes, vals), n).coeffs.copy()
    p = np.pad(p, (0, n + 1 - p.size))
    p[-1] = 1.0
    return ComplexPoly(p)


def eigenvalues(M, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Roots of :func:`char_poly`; the intended use is CMV matrices and their dilations."""
    return cpoly.roots(char_poly(M), tol=tol)


def defect_rank(M, rel: float = 1e-8) -> int:
    """Numerical rank of ``I - M M*``; eigenvalues below ``rel * n`` count as zero."""
    from .numrange import hermitian_eigs  # local: numrange depends on this module

    M = np.asarray(M, dtype=complex)
    n = M.shape[0]
    D = np.eye(n) - M @ M.conj().T
    D = 0.5 * (D + D.conj().T)
    w, _ = hermitian_eigs(D)
    return int(np.sum(np.abs(w) > rel * n))


def operator_norm(M, tol: float = 1e-10, maxiter: int = 10_000, seed: int = 0) -> float:
    """Largest singular value by power iteration on ``M* M``."""
    M = np.asarray(M, dtype=complex)
    n = M.shape[1]
    G = M.conj().T @ M
    if not np.any(G):
        return 0.0
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    prev = 0.0
    for _ in range(maxiter):
        y = G @ x
        lam = np.vdot(x, y).real
        nrm = np.linalg.norm(y)
        if nrm == 0:
            return 0.0
        x = y / nrm
        if abs(lam - prev) <= tol * max(lam, 1e-300):
            return float(np.sqrt(lam))
        prev = lam
    raise ArithmeticError("power iteration did not converge")


def jordan_block(n: int) -> np.ndarray:
    """Nilpotent Jordan block with ones on the subdiagonal."""
    return np.eye(n, k=-1, dtype=complex)


def matrix_to_json(M) -> dict:
    M = np.asarray(M, dtype=complex)
    return {"n": int(M.shape[0]), "entries": [[[float(x.real), float(x.imag)] for x in row] for row in M]}


def matrix_from_json(obj: dict) -> np.ndarray:
    n = int(obj["n"])
    rows = obj["entries"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"matrix JSON: entries must be {n} x {n}")
    M = np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix JSON: non-finite entries")
    return M
