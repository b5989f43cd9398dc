import numpy as np
import pytest

from ponceletkit import cpoly
from ponceletkit.cpoly import ComplexPoly


def sorted_c(x):
    return np.array(sorted(np.asarray(x, complex), key=lambda z: (round(z.real, 6), round(z.imag, 6))))


class TestComplexPoly:
    def test_trailing_zeros_trimmed_and_zero_poly(self):
        assert ComplexPoly([1, 2, 0, 0]).degree == 1
        z = ComplexPoly([0, 0])
        assert z.degree == 0 and np.array_equal(z.coeffs, [0])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            ComplexPoly([])

    def test_monic_flag_is_exact(self):
        assert ComplexPoly([3, 1]).is_monic
        assert not ComplexPoly([3, 1 + 1e-15]).is_monic

    def test_arithmetic(self):
        p = ComplexPoly([1, 1])
        q = ComplexPoly([-1, 1])
        assert (p * q).allclose(ComplexPoly([-1, 0, 1]))
        assert (p - p).degree == 0


class TestEval:
    def test_root(self):
        assert cpoly.eval([-1, 0, 1], 1) == 0

    def test_identity(self):
        assert cpoly.eval([0, 1], 3 + 4j) == 3 + 4j

    def test_product_root(self):
        p = cpoly.from_roots([0.5, 0.25j])
        assert abs(cpoly.eval(p, 0.25j)) < 1e-14

    def test_vectorised(self):
        z = np.array([0, 1, 2])
        assert np.allclose(cpoly.eval([1, 0, 1], z), [1, 2, 5])


class TestReverse:
    def test_linear(self):
        a = 0.3 - 0.4j
        assert cpoly.reverse([-a, 1], 1).allclose(ComplexPoly([1, -np.conj(a)]))

    def test_monomial_drops_degree(self):
        r = cpoly.reverse([0, 0, 0, 1], 3)
        assert r.degree == 0 and r.allclose(ComplexPoly([1]))

    def test_conjugated(self):
        assert cpoly.reverse([1 + 1j, 0, 1], 2).allclose(ComplexPoly([1, 0, 1 - 1j]))

    def test_degree_too_large(self):
        with pytest.raises(ValueError):
            cpoly.reverse([1, 1, 1], 1)

    def test_involution_and_modulus_on_circle(self, rng):
        c = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        p = ComplexPoly(c)
        assert cpoly.reverse(cpoly.reverse(p, 5), 5).allclose(p)
        z = np.exp(2j * np.pi * rng.random(20))
        assert np.allclose(np.abs(cpoly.eval(p, z)), np.abs(cpoly.eval(cpoly.reverse(p, 5), z)))


class TestRoots:
    def test_square(self):
        assert np.allclose(sorted_c(cpoly.roots([-1, 0, 1])), [-1, 1])

    def test_cube_roots_of_unity(self):
        r = cpoly.roots([-1, 0, 0, 1])
        assert np.allclose(r**3, 1)
        assert len(set(np.round(r, 8))) == 3

    def test_factored_cubic(self):
        want = np.array([0.9, 0.1j, -0.3])
        r = cpoly.roots(cpoly.from_roots(want))
        assert np.max(np.min(np.abs(r[:, None] - want[None, :]), axis=0)) < 1e-10

    def test_repeated_zero_roots(self):
        r = cpoly.roots(cpoly.from_roots([0, 0, 0, 0.7]))
        assert np.sum(np.abs(r) < 1e-12) == 3
        assert np.min(np.abs(r - 0.7)) < 1e-12

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            cpoly.roots([2])

    def test_random_round_trip(self, rng):
        for _ in range(20):
            m = int(rng.integers(1, 11))
            want = 2 * np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))
            r = cpoly.roots(cpoly.from_roots(want))
            d = np.abs(r[:, None] - want[None, :])
            assert max(d.min(axis=0).max(), d.min(axis=1).max()) < 1e-9

    def test_deterministic(self):
        p = cpoly.from_roots([0.1, 0.2j, -0.5, 0.3 + 0.3j])
        assert np.array_equal(cpoly.roots(p), cpoly.roots(p))


class TestInterpolate:
    def test_line(self):
        assert cpoly.interpolate([(0, 1), (1, 2)], 1).allclose(ComplexPoly([1, 1]))

    def test_cube_at_roots_of_unity(self):
        nodes = np.exp(2j * np.pi * np.arange(4) / 4)
        p = cpoly.interpolate(zip(nodes, nodes**3), 3)
        assert np.allclose(np.pad(p.coeffs, (0, 4 - p.coeffs.size)), [0, 0, 0, 1], atol=1e-12)

    def test_square_of_shift(self):
        nodes = [0, 1, 2j]
        p = cpoly.interpolate([(z, (z - 0.5) ** 2) for z in nodes], 2)
        assert np.allclose(p.coeffs, [0.25, -1, 1], atol=1e-12)

    def test_duplicate_nodes(self):
        with pytest.raises(ValueError):
            cpoly.interpolate([(1, 1), (1, 2)], 1)

    def test_too_few_nodes(self):
        with pytest.raises(ValueError):
            cpoly.interpolate([(1, 1)], 1)
