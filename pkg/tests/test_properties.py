"""Property-based checks of the core identities."""

import numpy as np
from hypothesis import assume, given
from hypothesis import strategies as st

from ponceletkit import blaschke, cmv, cpoly, ellipse, opuc, poncelet

from conftest import disk_points

seeds = st.integers(0, 2**32 - 1)


def _disk(seed, m, rmax=0.85):
    return disk_points(np.random.default_rng(seed), m, rmax)


@given(seeds, st.integers(1, 10))
def test_reverse_is_an_involution(seed, n):
    c = np.random.default_rng(seed).normal(size=(n + 1, 2)) @ np.array([1, 1j])
    assume(abs(c[0]) > 1e-3 and abs(c[-1]) > 1e-3)
    p = cpoly.ComplexPoly(c)
    assert cpoly.reverse(cpoly.reverse(p, n), n).allclose(p, atol=1e-14)


@given(seeds, st.integers(1, 12))
def test_roots_round_trip(seed, n):
    z = _disk(seed, n, 1.5)
    assume(np.min(np.abs(z[:, None] - z[None, :]) + np.eye(n)) > 1e-2)
    r = cpoly.roots(cpoly.from_roots(z))
    d = np.abs(r[:, None] - z[None, :])
    assert np.max(d.min(axis=0)) < 1e-8


@given(seeds, st.integers(1, 10))
def test_szego_round_trip(seed, n):
    a = _disk(seed, n, 0.95)
    back = opuc.verblunsky_from_poly(opuc.szego_chain(a))
    assert np.max(np.abs(back - a)) < 1e-10


@given(seeds, st.integers(1, 8))
def test_blaschke_is_unimodular_on_the_circle(seed, m):
    B = blaschke.from_foci(_disk(seed, m))
    z = np.exp(2j * np.pi * np.random.default_rng(seed + 1).random(20))
    assert np.max(np.abs(np.abs(blaschke.evaluate(B, z)) - 1)) < 1e-12


@given(seeds, st.integers(1, 8), st.floats(0, 2 * np.pi))
def test_solve_gives_degree_distinct_solutions(seed, m, t):
    B = blaschke.from_foci(_disk(seed, m))
    lam = np.exp(1j * t)
    z = blaschke.solve(B, lam)
    assert z.size == m + 1
    assert np.max(np.abs(blaschke.evaluate(B, z) - np.conj(lam))) < 1e-9
    assert np.all(np.diff(np.angle(z) % (2 * np.pi)) > 0)


@given(seeds, st.integers(1, 9))
def test_cutoff_cmv_has_rank_one_defect(seed, n):
    M = cmv.cutoff_cmv(_disk(seed, n, 0.9))
    assert cmv.defect_rank(M) == 1


@given(seeds, st.integers(1, 9), st.floats(0, 2 * np.pi))
def test_unitary_dilation_is_unitary(seed, n, t):
    U = cmv.unitary_dilation(_disk(seed, n, 0.9), np.exp(1j * t))
    assert np.max(np.abs(U @ U.conj().T - np.eye(n + 1))) < 1e-12


@given(seeds, st.integers(1, 6))
def test_bezoutian_is_hermitian(seed, m):
    # conj(P(1/conj z, 1/conj w)) (z w)^(N-1) = P(z, w) for any foci
    f = _disk(seed, m, 1.6)
    assume(np.min(np.abs(np.abs(f) - 1)) > 1e-2)
    P = poncelet.bezoutian_build(f)
    z, w = _disk(seed + 3, 4, 1.2), _disk(seed + 4, 4, 1.2)
    assume(np.min(np.abs(z)) > 0.1 and np.min(np.abs(w)) > 0.1)
    lhs = np.conj(P(1 / np.conj(z), 1 / np.conj(w))) * (z * w) ** (P.N - 1)
    rhs = P(z, w)
    assert np.max(np.abs(lhs - rhs)) <= 1e-9 * max(1.0, np.max(np.abs(rhs)))
    assert np.max(np.abs(P.coeffs - P.coeffs.T)) < 1e-12


@given(seeds, st.integers(1, 7))
def test_tau_permutes_each_polygon(seed, m):
    fam = poncelet.PonceletFamily.from_foci(_disk(seed, m))
    z0 = np.exp(1j * np.random.default_rng(seed).random() * 6)
    z = z0
    for _ in range(fam.n):
        z = poncelet.tau(fam, z)
    assert abs(z - z0) < 1e-8


@given(seeds, st.sampled_from([3, 4, 5]))
def test_circular_iteration_vieta(seed, n):
    f1, f2 = _disk(seed, 2, 0.6)
    e = ellipse.EllipseComponent(f1, f2, ellipse.closure_semiaxis(f1, f2, n))
    o = np.array(ellipse.circular_iteration(e, np.exp(1j * (seed % 628) / 100)))
    assert o.size == n
    o = np.append(o, o[:2])
    prod = ellipse.b1(o[1:-1], f1) * ellipse.b1(o[1:-1], f2)
    assert np.max(np.abs(o[2:] * o[:-2] - prod)) < 1e-9


@given(st.integers(3, 40), st.integers(1, 39))
def test_component_rank_recloses(n, k):
    assume(k < n)
    d, t = poncelet.component_rank(n, k)
    assert d * k == t * n and np.gcd(d, t) == 1
