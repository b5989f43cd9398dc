"""Acceptance suites. Each suite returns a list of :class:`Check` records.

Some suites hold a ``*_literal`` check next to a corrected one: the literal
check asserts a reference value exactly as stated, and is expected to fail
where that value is wrong. See ``README.md`` for the list.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import blaschke, cmv, numrange, opuc, poncelet
from .ellipse import (
    EllipseComponent,
    circular_iteration,
    closure_semiaxis,
    package_factor,
    package_from_ellipse,
)

__all__ = ["Check", "SUITES", "run", "random_foci", "set_distance"]

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class Check:
    name: str
    measured: float
    bound: float
    passed: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["measured"] = float(self.measured)
        d["bound"] = float(self.bound)
        return d


def _le(name, measured, bound):
    return Check(name, float(measured), float(bound), bool(measured <= bound))


def _eq(name, measured, expected):
    # exact equality check; ``bound`` records the expected value
    return Check(name, float(measured), float(expected), bool(measured == expected))


def random_foci(rng, m: int, rmax: float = 0.9) -> np.ndarray:
    """``m`` points uniformly distributed in the disk of radius ``rmax``."""
    return rmax * np.sqrt(rng.random(m)) * np.exp(TWO_PI * 1j * rng.random(m))


def set_distance(a, b) -> float:
    """Hausdorff distance between two finite point sets."""
    d = np.abs(np.asarray(a)[:, None] - np.asarray(b)[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def suite_jordan(seed=0):
    out = []
    for n in range(2, 7):
        pts = np.array([s.boundary_point for s in numrange.boundary(cmv.jordan_block(n), 720)])
        r = math.cos(math.pi / (n + 1))
        out.append(_le(f"jordan_radius_n{n}", np.max(np.abs(np.abs(pts) - r)), 1e-8))
    pts = np.array([s.boundary_point for s in numrange.boundary(cmv.jordan_block(2), 720)])
    chapple = (1 - 0.0**2) / 2
    out.append(_le("jordan_n2_equals_chapple_a0", np.max(np.abs(np.abs(pts) - chapple)), 1e-8))
    return out


def _palindromic_count(a):
    # P(1, w) = (1 - a)(w^4 + c w^3 + c w^2 + c w + 1), c = 1 - a; with x = w + 1/w
    # each root x of x^2 + c x + c - 2 in [-2, 2] yields two unimodular w.
    c = 1 - a
    xs = np.roots([1, c, c - 2])
    return int(sum(2 for x in xs if abs(x.imag) < 1e-12 and abs(x.real) <= 2))


def suite_counts(seed=0):
    out = []
    literal = {0.3: 4, 0.7: 4, 0.9: 4, 1.2: 2, 1.5: 2, 2.0: 2, 2.4: 2}
    for a, want in literal.items():
        P = poncelet.bezoutian_build([0, 0, 0, a])
        sol = poncelet.on_circle_solutions(P, 1.0)
        Nmd = (5, 0, 0) if a < 1 else (5, 1, 0)
        out.append(_eq(f"count_literal_a{a}", sol.count, want))
        out.append(_eq(f"count_oracle_a{a}", sol.count, _palindromic_count(a)))
        out.append(_eq(f"N_m_d_a{a}", float((P.N, P.m, P.d) == Nmd), 1.0))
        ok, _ = poncelet.mirman_condition(P.foci)
        if ok:
            out.append(_eq(f"count_equals_n_minus_1_a{a}", sol.count, sol.expected))
    for a, want in ((1.5, False), (0.9, True), (2.4, True)):
        ok, mn = poncelet.mirman_condition([0, 0, 0, a])
        out.append(_eq(f"mirman_a{a}_is_{want}", float(ok), float(want)))
    return out


def _displayed_quartic(a, u, v):
    # same as zero_foci_quartic except for -2au (instead of -4au) inside the v^2 bracket
    g, scale = poncelet.zero_foci_quartic(a, u, v)
    delta = 4 * a * u * v**2
    return g + delta, scale + np.abs(delta)


def _sampled_poles(a, count=200):
    P = poncelet.bezoutian_build([0, 0, 0, a])
    poles = []
    j = 0
    while len(poles) < count:
        z0 = np.exp(1j * (TWO_PI * (j + 0.37) / count))
        for z, w in poncelet.tangent_chords(P, [z0]):
            if abs(z + w) > 1e-6 and len(poles) < count:
                poles.append(poncelet.pole_of_chord(z, w))
        j += 1
    return np.array(poles)


def _turning_signs(p):
    e = np.roll(p, -1) - p
    cr = (np.conj(e) * np.roll(e, -1)).imag
    return int(np.sum(cr > 0)), int(np.sum(cr < 0))


def suite_quartic(seed=0):
    out = []
    for a in (0.9, 2.4):
        zeta = _sampled_poles(a)
        g, sc = poncelet.zero_foci_quartic(a, zeta.real, zeta.imag)
        out.append(_le(f"quartic_corrected_a{a}", np.max(np.abs(g) / sc), 1e-6))
        g, sc = _displayed_quartic(a, zeta.real, zeta.imag)
        out.append(_le(f"quartic_literal_a{a}", np.max(np.abs(g) / sc), 1e-6))
    # convexity: no negatively turning segment for a = 0.3, inflections of the dual of C_2 for a = 0.9
    th = TWO_PI * np.arange(1440) / 1440
    z = np.exp(1j * th)
    fam = poncelet.PonceletFamily.from_foci([0, 0, 0, 0.3])
    neg = 0
    for k in (1, 2):
        neg += _turning_signs(poncelet.envelope_curve(fam, th, k))[1]
        w = np.exp(1j * poncelet.advance(fam, th, k))
        neg += _turning_signs(2 * z * w / (z + w))[1]
    out.append(_eq("convex_a0.3_negative_turns", neg, 0))
    fam = poncelet.PonceletFamily.from_foci([0, 0, 0, 0.9])
    w = np.exp(1j * poncelet.advance(fam, th, 2))
    neg = _turning_signs(2 * z * w / (z + w))[1]
    out.append(Check("nonconvex_dual_a0.9_negative_turns", neg, 1, neg >= 1))
    return out


def suite_realizations(seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(20):
        f = random_foci(rng, int(rng.integers(1, 8)))
        fam = poncelet.PonceletFamily.from_foci(f)
        for lam in np.exp(TWO_PI * 1j * rng.random(8)):
            a = opuc.paraorthogonal_extension(f, lam)
            b = blaschke.solve(fam.B, lam)
            c = cmv.eigenvalues(cmv.unitary_dilation(fam.alphas, lam))
            worst = max(worst, set_distance(a, b), set_distance(a, c), set_distance(b, c))
    return [_le("three_realizations_agree", worst, 1e-7)]


def suite_charpoly(seed=0):
    rng = np.random.default_rng(seed)
    coef = rank = norm = 0.0
    for _ in range(50):
        # degree >= 2: a 1 x 1 cut-off matrix [conj(alpha_0)] has norm |alpha_0| < 1
        phi = opuc.monic_from_foci(random_foci(rng, int(rng.integers(2, 9))))
        M = cmv.cutoff_cmv(opuc.verblunsky_from_poly(phi))
        coef = max(coef, np.max(np.abs(cmv.char_poly(M).coeffs - phi.coeffs)))
        rank = max(rank, abs(cmv.defect_rank(M) - 1))
        norm = max(norm, abs(cmv.operator_norm(M) - 1))
    return [
        _le("char_poly_equals_phi", coef, 1e-8),
        _eq("defect_rank_is_1_max_deviation", rank, 0),
        _le("operator_norm_is_1", norm, 1e-8),
    ]


def suite_intersection(seed=0):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(5):
        fam = poncelet.PonceletFamily.from_foci(random_foci(rng, int(rng.integers(1, 6))))
        A = cmv.cutoff_cmv(fam.alphas)
        bd = np.array([s.boundary_point for s in numrange.boundary(A, 720)])
        planes = []
        for lam in np.exp(TWO_PI * 1j * np.arange(128) / 128):
            planes += numrange.polygon_halfplanes(fam.polygon(lam))
        worst = max(worst, numrange.hausdorff(bd, numrange.halfplane_intersection(planes)))
    return [_le("numrange_equals_polygon_intersection", worst, 2e-3)]


def suite_envelope(seed=0):
    rng = np.random.default_rng(seed)
    families = [[0, 0, 0, 0.9], [0.5, -0.5]] + [random_foci(rng, int(rng.integers(1, 7))) for _ in range(3)]
    th = TWO_PI * np.arange(720) / 720
    z = np.exp(1j * th)
    rmax, dmin = 0.0, math.inf
    for f in families:
        fam = poncelet.PonceletFamily.from_foci(f)
        dz = blaschke.arg_derivative(fam.B, z)
        for k in range(1, fam.n // 2 + 1):
            wt = poncelet.advance(fam, th, k)
            w = np.exp(1j * wt)
            wdot = dz / blaschke.arg_derivative(fam.B, w)
            rmax = max(rmax, np.max(np.abs(poncelet.envelope_curve(fam, th, k))))
            dmin = min(dmin, min(poncelet.chord_distance_sq(a, b, c) for a, b, c in zip(z, w, wdot)))
    return [
        Check("envelope_inside_disk", rmax, 1.0, rmax < 1),
        Check("chord_distance_sq_at_least_1", dmin, 1.0, dmin >= 1),
    ]


def suite_closure(seed=0):
    rng = np.random.default_rng(seed)
    s0 = closure_semiaxis(0, 0, 3)
    s1 = closure_semiaxis(0.5, -0.5, 3)
    formula = 0.5 * math.sqrt(1 - 0.25 - 0.25 + 0.0625)
    out = [
        _le("closure_0_0_3", abs(s0 - 0.5), 1e-10),
        _le("closure_half_literal", abs(s1 - math.sqrt(33) / 16), 1e-8),
        _le("closure_half_formula", abs(s1 - formula), 1e-8),
    ]
    bad = 0
    for f1, f2, n in ((0.5, -0.5, 3), (0.2 + 0.1j, -0.3j, 5), (0.1, 0.4 - 0.2j, 7)):
        e = EllipseComponent(complex(f1), complex(f2), closure_semiaxis(f1, f2, n))
        for w0 in np.exp(TWO_PI * 1j * rng.random(32)):
            bad += circular_iteration(e, w0).n != n
    out.append(_eq("porism_32_random_starts_failures", bad, 0))
    return out


def _rerank(comps, n):
    bad = 0
    for k, c in enumerate(comps, start=1):
        if c.s > 0:
            bad += circular_iteration(c, np.exp(0.7j)).n != poncelet.component_rank(n, k)[0]
    return bad


def suite_factor(seed=0):
    rng = np.random.default_rng(seed)
    cases = [np.zeros(4, complex)]
    for _ in range(3):
        f1, f2 = random_foci(rng, 2, 0.6)
        cases.append(np.array(package_from_ellipse(f1, f2, 5)[1]))
    worst, bad = 0.0, 0
    for i, f in enumerate(cases):
        comps = package_factor(f, samples=100, seed=seed + i, tol=math.inf)
        worst = max(worst, comps.residual)
        bad += _rerank(comps, f.size + 1)
    return [_le("factorization_residual", worst, 1e-7), _eq("components_reclose_failures", bad, 0)]


def suite_combinatorics(seed=0):
    table = {1: 24, 5: 24, 7: 24, 11: 24, 2: 12, 10: 12, 3: 8, 9: 8, 4: 6, 6: 4, 8: 3, 12: 2}
    bad = sum(poncelet.component_rank(24, k)[0] != r for k, r in table.items())
    for d in (3, 4, 6, 8, 12, 24):
        phi = sum(1 for j in range(1, d + 1) if math.gcd(j, d) == 1)
        want = sum(1 for r in table.values() if r == d)
        bad += poncelet.totient_count(24, d) != want or want != phi // 2
    return [_eq("n24_table_mismatches", bad, 0)]


def suite_derivative(seed=0):
    rng = np.random.default_rng(seed)
    h = 1e-5
    worst = 0.0
    for _ in range(10):
        B = blaschke.from_foci(random_foci(rng, int(rng.integers(1, 8))))
        th = TWO_PI * rng.random(64)
        fd = (blaschke.lifted_arg(B, th + h) - blaschke.lifted_arg(B, th - h)) / (2 * h)
        worst = max(worst, np.max(np.abs(fd - blaschke.arg_derivative(B, np.exp(1j * th)))))
    return [_le("arg_derivative_vs_finite_difference", worst, 1e-6)]


SUITES = {
    "jordan": suite_jordan,
    "counts": suite_counts,
    "quartic": suite_quartic,
    "realizations": suite_realizations,
    "charpoly": suite_charpoly,
    "intersection": suite_intersection,
    "envelope": suite_envelope,
    "closure": suite_closure,
    "factor": suite_factor,
    "combinatorics": suite_combinatorics,
    "derivative": suite_derivative,
}


def run(names=("all",), seed: int = 0) -> dict:
    """Run the named suites (or ``"all"``); returns ``{suite: [Check, ...]}``."""
    if "all" in names:
        names = tuple(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return {n: SUITES[n](seed) for n in names}
