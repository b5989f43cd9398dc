import numpy as np
import pytest

from ponceletkit import blaschke, opuc

from conftest import disk_points


class TestConstruction:
    def test_empty_foci_is_identity(self):
        B = blaschke.from_foci([])
        assert B.degree == 1 and np.isclose(B(0.3 + 0.2j), 0.3 + 0.2j)

    def test_single_zero_focus(self):
        B = blaschke.from_foci([0])
        assert np.isclose(B(0.4 - 0.3j), (0.4 - 0.3j) ** 2)

    def test_degree_five(self):
        a = 0.6
        B = blaschke.from_foci([0, 0, 0, a])
        z = 0.3 + 0.5j
        assert B.degree == 5
        assert np.isclose(B(z), z * z**3 * (z - a) / (1 - a * z))
        assert B(0) == 0

    def test_focus_outside(self):
        with pytest.raises(ValueError):
            blaschke.from_foci([1.2])

    def test_unimodular_on_circle(self, rng):
        B = blaschke.from_zeros(disk_points(rng, 7, 0.95))
        z = np.exp(2j * np.pi * np.arange(256) / 256)
        assert np.allclose(np.abs(B(z)), 1, atol=1e-12)

    def test_numer_denom(self):
        B = blaschke.from_foci([0.5])
        z = 0.2 + 0.1j
        assert np.isclose(B.numer(z) / B.denom(z), B(z))


class TestLiftedArg:
    def test_power(self):
        B = blaschke.from_zeros([0, 0, 0])
        th = np.linspace(0, 6, 7)
        L = blaschke.lifted_arg(B, th)
        assert np.allclose(L - L[0], 3 * (th - th[0]))

    def test_winding(self, rng):
        B = blaschke.from_zeros(disk_points(rng, 5))
        th = rng.random(5)
        assert np.allclose(blaschke.lifted_arg(B, th + 2 * np.pi) - blaschke.lifted_arg(B, th), 2 * np.pi * 5)

    def test_three_methods_agree(self):
        B = blaschke.from_foci([0.5])
        want = blaschke.lifted_arg(B, np.pi) - blaschke.lifted_arg(B, 0.0)
        for method in ("unwrap", "integrate"):
            got = blaschke.lifted_arg(B, np.pi, method=method) - blaschke.lifted_arg(B, 0.0)
            assert abs(got - want) < 1e-8

    def test_near_circle_zero(self):
        B = blaschke.from_zeros([0.99, -0.5j])
        a = blaschke.lifted_arg(B, 2.0, method="unwrap")
        assert abs(a - blaschke.lifted_arg(B, 2.0)) < 1e-8

    def test_increasing(self, rng):
        B = blaschke.from_zeros(disk_points(rng, 4, 0.98))
        th = np.linspace(0, 2 * np.pi, 2000)
        assert np.all(np.diff(blaschke.lifted_arg(B, th)) > 0)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            blaschke.lifted_arg(blaschke.from_foci([]), 0.0, method="spline")


class TestArgDerivative:
    def test_all_zero(self):
        B = blaschke.from_zeros([0, 0, 0, 0])
        assert np.allclose(blaschke.arg_derivative(B, np.exp(1j * np.linspace(0, 6, 9))), 4)

    def test_half(self):
        assert np.isclose(blaschke.arg_derivative(blaschke.from_foci([0.5]), 1), 4)

    def test_finite_difference(self, rng):
        B = blaschke.from_foci(disk_points(rng, 5))
        th, h = rng.random(16) * 6, 1e-5
        fd = (blaschke.lifted_arg(B, th + h) - blaschke.lifted_arg(B, th - h)) / (2 * h)
        assert np.max(np.abs(fd - blaschke.arg_derivative(B, np.exp(1j * th)))) < 1e-6

    def test_off_circle(self):
        with pytest.raises(ValueError):
            blaschke.arg_derivative(blaschke.from_foci([]), 0.5)


class TestSolve:
    def test_square(self):
        z = blaschke.solve(blaschke.from_zeros([0, 0]), 1)
        assert np.allclose(z, [1, -1])

    def test_cube_minus_i(self):
        z = blaschke.solve(blaschke.from_zeros([0, 0, 0]), 1j)
        want = np.exp(1j * np.array([np.pi / 2, 7 * np.pi / 6, -np.pi / 6]))
        assert np.allclose(z**3, -1j)
        assert np.max(np.min(np.abs(z[:, None] - want[None, :]), axis=1)) < 1e-12

    def test_matches_paraorthogonal(self):
        f = [0, 0, 0, 0.9]
        z = blaschke.solve(blaschke.from_foci(f), 1)
        assert np.allclose(z, opuc.paraorthogonal_extension(f, 1), atol=1e-9)

    def test_values(self, rng):
        B = blaschke.from_foci(disk_points(rng, 6, 0.97))
        lam = np.exp(2j * np.pi * rng.random())
        z = blaschke.solve(B, lam)
        assert z.size == 7 and np.allclose(B(z), np.conj(lam), atol=1e-11)
        assert np.min(np.abs(np.diff(z))) > 0

    def test_bad_lambda(self):
        with pytest.raises(ValueError):
            blaschke.solve(blaschke.from_foci([0]), 2)


class TestCompose:
    def test_identity_outer(self):
        inner = blaschke.from_foci([0.3j, -0.2])
        D = blaschke.compose(blaschke.from_zeros([0]), inner)
        z = np.exp(1j * np.linspace(0, 6, 5))
        assert np.allclose(D(z), inner(z))

    def test_powers(self):
        D = blaschke.compose(blaschke.from_zeros([0, 0]), blaschke.from_zeros([0, 0, 0]))
        assert D.degree == 6 and np.isclose(D(0.7 + 0.1j), (0.7 + 0.1j) ** 6)

    def test_ellipse_example(self):
        inner = blaschke.from_foci([0.5, -0.5])
        outer = blaschke.from_zeros([0, 0.5j])
        D = blaschke.compose(outer, inner)
        z = blaschke.solve(D, 1)
        assert D.degree == 6 and z.size == 6
        assert np.allclose(np.abs(z), 1) and np.allclose(D(z), 1, atol=1e-11)
        E = D.expand()
        w = np.exp(1j * np.linspace(0, 6, 11))
        assert np.allclose(E(w), D(w), atol=1e-10)
        # zeros of the inner product are zeros of the composition when outer(0) = 0
        assert np.all(np.min(np.abs(E.zeros[:, None] - inner.zeros[None, :]), axis=0) < 1e-10)

    def test_lift_matches_expanded(self):
        D = blaschke.compose(blaschke.from_zeros([0, 0.3 + 0.2j]), blaschke.from_zeros([0.1, -0.4j]))
        E = D.expand()
        th = np.linspace(0, 2 * np.pi, 50)
        a, b = blaschke.lifted_arg(D, th), blaschke.lifted_arg(E, th)
        assert np.allclose(a - a[0], b - b[0])
        assert np.allclose(blaschke.arg_derivative(D, np.exp(1j * th)), blaschke.arg_derivative(E, np.exp(1j * th)))
