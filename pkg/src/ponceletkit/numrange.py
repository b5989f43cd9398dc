"""Numerical range boundaries via the support function, plus polygon helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


__all__ = [
    "SupportSample",
    "EllipseComponent",
    "hermitian_part",
    "hermitian_eigs",
    "support_point",
    "boundary",
    "kippenhahn_eval",
    "ellipse_range_2x2",
    "halfplane_intersection",
    "polygon_halfplanes",
    "hausdorff",
    "point_in_convex_polygon",
]


@dataclass(frozen=True)
class SupportSample:
    phi: float
    lambda_phi: float
    boundary_point: complex


@dataclass(frozen=True)
class EllipseComponent:
    """Ellipse with foci ``f1``, ``f2`` and minor semiaxis ``s``; ``s = 0`` with ``f1 == f2`` is a point."""

    f1: complex
    f2: complex
    s: float

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("minor semiaxis must be nonnegative")

    @property
    def major(self) -> float:
        return float(np.hypot(self.s, abs(self.f1 - self.f2) / 2))

    def to_json(self) -> dict:
        f1, f2 = complex(self.f1), complex(self.f2)
        return {"f1": [f1.real, f1.imag], "f2": [f2.real, f2.imag], "s": float(self.s)}

    @classmethod
    def from_json(cls, obj) -> "EllipseComponent":
        return cls(complex(*obj["f1"]), complex(*obj["f2"]), float(obj["s"]))


def hermitian_part(A, phi: float) -> np.ndarray:
    """``(e^{-i phi} A + e^{i phi} A*) / 2``; ``phi`` may be an array (stacked output)."""
    A = np.asarray(A, dtype=complex)
    ph = np.exp(-1j * np.asarray(phi, dtype=float))[..., None, None]
    B = ph * A
    return 0.5 * (B + np.swapaxes(B.conj(), -1, -2))


def _jacobi_sweep(H, X, p, q, eps):
    h = H[:, p, q]
    a = H[:, p, p].real
    b = H[:, q, q].real
    mag = np.abs(h)
    act = mag > eps
    safe = np.where(act, mag, 1.0)
    tau = (b - a) / (2 * safe)
    t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1 + tau * tau))
    c = np.where(act, 1 / np.sqrt(1 + t * t), 1.0)
    s = np.where(act, t * c, 0.0)
    ph = np.where(act, h / safe, 1.0)
    # V = diag(1, conj(ph)) @ [[c, s], [-s, c]]
    V = np.empty((H.shape[0], 2, 2), dtype=complex)
    V[:, 0, 0] = c
    V[:, 0, 1] = s
    V[:, 1, 0] = -s * np.conj(ph)
    V[:, 1, 1] = c * np.conj(ph)
    idx = [p, q]
    H[:, :, idx] = H[:, :, idx] @ V
    H[:, idx, :] = np.swapaxes(V.conj(), 1, 2) @ H[:, idx, :]
    H[:, p, q] = np.where(act, 0, H[:, p, q])
    H[:, q, p] = np.where(act, 0, H[:, q, p])
    X[:, :, idx] = X[:, :, idx] @ V


def hermitian_eigs(H, tol: float = 1e-12, max_sweeps: int = 60):
    """Cyclic Jacobi eigen-decomposition of a Hermitian matrix (or a stack of them).

    Returns ``(w, V)`` with eigenvalues ascending along the last axis and the
    matching orthonormal eigenvectors as columns of ``V``.
    """
    H = np.array(H, dtype=complex)
    single = H.ndim == 2
    if single:
        H = H[None]
    m, n, _ = H.shape
    norm = np.sqrt(np.sum(np.abs(H) ** 2, axis=(1, 2)))
    herm_err = np.max(np.abs(H - np.swapaxes(H.conj(), 1, 2)), axis=(1, 2))
    if np.any(herm_err > 1e-9 * np.maximum(norm, 1.0)):
        raise ValueError("matrix is not Hermitian")
    H = 0.5 * (H + np.swapaxes(H.conj(), 1, 2))
    X = np.broadcast_to(np.eye(n, dtype=complex), (m, n, n)).copy()
    thresh = tol * np.maximum(norm, np.finfo(float).tiny)
    offmask = ~np.eye(n, dtype=bool)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.abs(H * offmask) ** 2, axis=(1, 2)))
        if np.all(off <= thresh):
            break
        eps = 1e-3 * thresh / max(n, 1)
        for p, q in pairs:
            _jacobi_sweep(H, X, p, q, eps)
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    w = np.diagonal(H, axis1=1, axis2=2).real
    order = np.argsort(w, axis=1)
    w = np.take_along_axis(w, order, axis=1)
    X = np.take_along_axis(X, order[:, None, :], axis=2)
    if single:
        return w[0], X[0]
    return w, X


def _support(A, phis):
    A = np.asarray(A, dtype=complex)
    w, V = hermitian_eigs(hermitian_part(A, phis))
    x = V[:, :, -1]
    pts = np.einsum("mi,ij,mj->m", x.conj(), A, x)
    return w[:, -1], pts


def support_point(A, phi: float) -> SupportSample:
    """Top eigenvalue of the rotated Hermitian part and the boundary point ``x* A x``."""
    lam, pts = _support(A, np.array([phi]))
    return SupportSample(float(phi), float(lam[0]), complex(pts[0]))


def boundary(A, samples: int = 720) -> list[SupportSample]:
    """Support samples at ``samples`` equally spaced angles in ``[0, 2 pi)``, counter-clockwise."""
    if samples < 3:
        raise ValueError("need at least 3 samples")
    phis = 2 * np.pi * np.arange(samples) / samples
    lam, pts = _support(A, phis)
    return [SupportSample(float(f), float(l), complex(p)) for f, l, p in zip(phis, lam, pts)]


def kippenhahn_eval(A, u1, u2, u3) -> complex:
    """``det(u1 Re A + u2 Im A - u3 I)``."""
    A = np.asarray(A, dtype=complex)
    re = 0.5 * (A + A.conj().T)
    im = (A - A.conj().T) / 2j
    return complex(np.linalg.det(u1 * re + u2 * im - u3 * np.eye(A.shape[0])))


def ellipse_range_2x2(A, tol: float = 1e-10) -> EllipseComponent:
    """Foci and minor semiaxis of the elliptical numerical range of a 2 x 2 matrix."""
    A = np.asarray(A, dtype=complex)
    if A.shape != (2, 2):
        raise ValueError("need a 2 x 2 matrix")
    # eigenvalues from trace and determinant: exact for the double eigenvalue of a Jordan block
    tr = A[0, 0] + A[1, 1]
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    disc = np.sqrt(tr * tr - 4 * det + 0j)
    f1, f2 = 0.5 * (tr + disc), 0.5 * (tr - disc)
    rad = np.trace(A.conj().T @ A).real - abs(f1) ** 2 - abs(f2) ** 2
    if rad < -tol:
        raise ValueError(f"negative minor-axis radicand {rad:.3g}")
    return EllipseComponent(complex(f1), complex(f2), 0.5 * math.sqrt(max(float(rad), 0.0)))


def polygon_halfplanes(vertices):
    """Half-planes ``(outward unit normal, offset)`` of a convex ccw polygon."""
    v = np.asarray(vertices, dtype=complex)
    e = np.roll(v, -1) - v
    nrm = -1j * e / np.abs(e)
    off = np.real(np.conj(nrm) * v)
    return list(zip(nrm, off))


def _clip(poly, normal, offset):
    if len(poly) == 0:
        return poly
    val = np.real(np.conj(normal) * poly) - offset
    out = []
    m = len(poly)
    for i in range(m):
        a, b = poly[i], poly[(i + 1) % m]
        va, vb = val[i], val[(i + 1) % m]
        if va <= 0:
            out.append(a)
        if (va < 0 < vb) or (vb < 0 < va):
            out.append(a + (b - a) * va / (va - vb))
    return np.array(out, dtype=complex)


def _clip_all(poly, planes):
    for n, c in planes:
        poly = _clip(poly, n, c)
        if len(poly) < 3:
            raise ValueError("empty half-plane intersection")
    return poly


def halfplane_intersection(planes, bound: float = 1e6) -> np.ndarray:
    """Vertices (ccw) of ``{x : Re(conj(n) x) <= c}`` over all ``(n, c)`` planes.

    Incremental clipping of a large square. Planes whose normals agree
    within 1e-10 are merged, keeping the tighter offset.
    """
    planes = [(complex(n) / abs(n), float(c)) for n, c in planes]
    if len(planes) < 3:
        raise ValueError("need at least 3 half-planes")
    planes.sort(key=lambda nc: (np.angle(nc[0]), nc[1]))
    merged = []
    for n, c in planes:
        if merged and abs(merged[-1][0] - n) < 1e-10:
            if c < merged[-1][1]:
                merged[-1] = (n, c)
            continue
        merged.append((n, c))
    square = np.array([1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j])
    poly = _clip_all(bound * square, merged)
    if np.max(np.abs(poly)) >= 0.5 * bound:
        raise ValueError("unbounded half-plane intersection")
    # second pass from a tight box: cuts of the huge square lose ~bound * eps
    poly = _clip_all((2 * np.max(np.abs(poly)) + 1) * square, merged)
    # drop near-duplicate vertices created by almost-parallel cuts
    keep = np.abs(poly - np.roll(poly, 1)) > 1e-14
    return poly[keep]


def _point_segment_dist(pts, a, b):
    ab = b - a
    den = np.abs(ab) ** 2
    t = np.real((pts[:, None] - a[None, :]) * np.conj(ab)[None, :]) / np.where(den == 0, 1, den)[None, :]
    t = np.clip(t, 0, 1)
    proj = a[None, :] + t * ab[None, :]
    return np.min(np.abs(pts[:, None] - proj), axis=1)


def hausdorff(poly_a, poly_b) -> float:
    """Hausdorff distance between two closed polylines given by their vertices."""
    a = np.asarray(poly_a, dtype=complex)
    b = np.asarray(poly_b, dtype=complex)
    d_ab = _point_segment_dist(a, b, np.roll(b, -1)).max()
    d_ba = _point_segment_dist(b, a, np.roll(a, -1)).max()
    return float(max(d_ab, d_ba))


def point_in_convex_polygon(p: complex, vertices, tol: float = 1e-10) -> bool:
    return all(np.real(np.conj(n) * p) <= c + tol for n, c in polygon_halfplanes(vertices))
