import numpy as np
import pytest

from ponceletkit import blaschke, cmv, cpoly, opuc
from ponceletkit.cpoly import ComplexPoly

from conftest import disk_points


class TestThetaBlock:
    @pytest.mark.parametrize(
        "alpha, want",
        [(0, [[0, 1], [1, 0]]), (1, [[1, 0], [0, -1]]), (0.6, [[0.6, 0.8], [0.8, -0.6]])],
    )
    def test_values(self, alpha, want):
        assert np.allclose(cmv.theta_block(alpha), want)

    def test_unitary(self):
        T = cmv.theta_block(0.3 - 0.5j)
        assert np.allclose(T.conj().T @ T, np.eye(2))

    def test_too_large(self):
        with pytest.raises(ValueError):
            cmv.theta_block(1.1)


class TestCutoff:
    def test_free(self):
        assert np.allclose(cmv.cutoff_cmv([0, 0]), [[0, 0], [1, 0]])

    def test_char_poly_of_single_focus(self):
        a = 0.5
        M = cmv.cutoff_cmv([np.conj(a), 0, 0, 0])
        assert cmv.char_poly(M).allclose(opuc.monic_from_foci([0, 0, 0, a]), atol=1e-9)

    def test_two_by_two_dilation(self):
        f, lam = 0.3 + 0.2j, np.exp(0.9j)
        rho = np.sqrt(1 - abs(f) ** 2)
        want = [[f, np.conj(lam) * rho], [rho, -np.conj(f) * np.conj(lam)]]
        assert np.allclose(cmv.cutoff_cmv([np.conj(f), lam]), want)

    def test_invalid(self):
        with pytest.raises(ValueError):
            cmv.cutoff_cmv([1.0, 0.2])
        with pytest.raises(ValueError):
            cmv.cutoff_cmv([])

    def test_five_diagonal(self, rng):
        M = cmv.cutoff_cmv(disk_points(rng, 8))
        i, j = np.indices(M.shape)
        assert np.all(M[np.abs(i - j) > 2] == 0)


class TestDilation:
    def test_one_by_one(self):
        assert np.allclose(cmv.unitary_dilation([], 1), [[1]])

    def test_free_pair(self):
        U = cmv.unitary_dilation([0], 1)
        assert np.allclose(U.conj().T @ U, np.eye(2))
        assert np.allclose(sorted(cmv.eigenvalues(U).real), [-1, 1])

    def test_matches_blaschke(self):
        f = [0, 0, 0, 0.9]
        al = opuc.verblunsky_from_poly(opuc.monic_from_foci(f))
        U = cmv.unitary_dilation(al, 1j)
        assert np.max(np.abs(U.conj().T @ U - np.eye(5))) < 1e-10
        ev = opuc.sort_on_circle(cmv.eigenvalues(U))
        assert np.allclose(ev, blaschke.solve(blaschke.from_foci(f), 1j), atol=1e-8)

    def test_eigenvalues_are_popuc_roots(self, rng):
        al = disk_points(rng, 5)
        lam = np.exp(0.4j)
        ev = cmv.eigenvalues(cmv.unitary_dilation(al, lam))
        r = cpoly.roots(opuc.popuc(opuc.szego_chain(al), lam))
        assert np.max(np.min(np.abs(ev[:, None] - r[None, :]), axis=1)) < 1e-7

    def test_bad_lambda(self):
        with pytest.raises(ValueError):
            cmv.unitary_dilation([0.1], 0.9)


class TestCharPoly:
    def test_zero(self):
        assert cmv.char_poly(np.zeros((2, 2))).allclose(ComplexPoly([0, 0, 1]))

    def test_diagonal(self):
        p = cmv.char_poly(np.diag([0.3, -0.4j]))
        assert p.allclose(cpoly.from_roots([0.3, -0.4j]), atol=1e-14)

    def test_identity_random(self, rng):
        for _ in range(10):
            phi = opuc.monic_from_foci(disk_points(rng, int(rng.integers(1, 9))))
            M = cmv.cutoff_cmv(opuc.verblunsky_from_poly(phi))
            assert cmv.char_poly(M).allclose(phi, atol=1e-8)


class TestDefectAndNorm:
    def test_unitary_rank_zero(self):
        assert cmv.defect_rank(cmv.unitary_dilation([0.2, 0.1j], 1)) == 0

    def test_cutoff_rank_one(self, rng):
        assert cmv.defect_rank(cmv.cutoff_cmv(disk_points(rng, 6))) == 1

    def test_jordan_rank_one(self):
        assert cmv.defect_rank(cmv.jordan_block(3)) == 1

    def test_norms(self):
        assert abs(cmv.operator_norm(np.eye(3)) - 1) < 1e-10
        assert abs(cmv.operator_norm(np.diag([0.5, 0.2])) - 0.5) < 1e-10
        assert cmv.operator_norm(np.zeros((2, 2))) == 0

    def test_cutoff_norm_one(self, rng):
        for m in range(2, 9):
            assert abs(cmv.operator_norm(cmv.cutoff_cmv(disk_points(rng, m))) - 1) < 1e-8

    def test_one_by_one_norm_is_modulus(self):
        # the unit-norm property needs n >= 2
        assert abs(cmv.operator_norm(cmv.cutoff_cmv([0.4j])) - 0.4) < 1e-12


class TestJson:
    def test_round_trip(self, rng):
        M = cmv.cutoff_cmv(disk_points(rng, 4))
        assert np.array_equal(cmv.matrix_from_json(cmv.matrix_to_json(M)), M)

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            cmv.matrix_from_json({"n": 2, "entries": [[[0, 0]]]})
