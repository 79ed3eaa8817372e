import math

import numpy as np
import pytest

from concfill.linalg import InvalidStateError
from concfill.states import (
    AcinParams,
    GGHZParams,
    GWParams,
    RankTwoFamily,
    apply_local_unitary,
    as_pure_state,
    ghz_state,
    ket,
    make_acin_state,
    make_eigenstate,
    make_gghz,
    make_gw,
    make_rank2_mixture,
    projector,
    random_pure_state,
    random_unitary,
    same_up_to_phase,
    w_state,
)

S2 = 1 / math.sqrt(2)
S3 = 1 / math.sqrt(3)


class TestAcin:
    def test_ghz(self):
        assert same_up_to_phase(make_acin_state(AcinParams((S2, 0, 0, 0, S2))), ghz_state())

    def test_product(self):
        assert np.allclose(make_acin_state(AcinParams((1, 0, 0, 0, 0))), ket({"000": 1}))

    def test_placement(self):
        psi = make_acin_state(AcinParams((S3, 0, S3, S3, 0)))
        assert np.allclose(psi, ket({"000": S3, "101": S3, "110": S3}))

    def test_phase_on_100(self):
        psi = make_acin_state(AcinParams((S2, S2, 0, 0, 0), theta=math.pi / 2))
        assert np.isclose(psi[0b100], 1j * S2)

    def test_rejects_linear_normalization(self):
        with pytest.raises(InvalidStateError):
            AcinParams((0.2, 0.2, 0.2, 0.2, 0.2))

    @pytest.mark.parametrize("theta", [-0.1, 3.2])
    def test_rejects_theta(self, theta):
        with pytest.raises(InvalidStateError):
            AcinParams((1, 0, 0, 0, 0), theta)

    def test_rejects_negative(self):
        with pytest.raises(InvalidStateError):
            AcinParams((-S2, 0, 0, 0, S2))


class TestFamilies:
    def test_gghz_gw(self):
        assert np.allclose(make_gghz(GGHZParams.symmetric()), ghz_state())
        assert np.allclose(make_gw(GWParams.symmetric()), w_state())
        assert np.allclose(make_gghz(GGHZParams(1, 0)), ket({"000": 1}))

    def test_rejects_unnormalized(self):
        with pytest.raises(InvalidStateError):
            GGHZParams(0.5, 0.5)
        with pytest.raises(InvalidStateError):
            GWParams(0.5, 0.5, 0.5)

    def test_eigenstate_limits(self):
        assert np.allclose(make_eigenstate(RankTwoFamily.symmetric(1.0)), ghz_state())
        assert same_up_to_phase(make_eigenstate(RankTwoFamily.symmetric(0.0)), w_state())
        assert np.allclose(make_eigenstate(RankTwoFamily.symmetric(0.0)), -w_state())

    def test_eigenstate_half(self):
        s6 = 1 / math.sqrt(6)
        expected = [0.5, -s6, -s6, 0, -s6, 0, 0, 0.5]
        assert np.allclose(make_eigenstate(RankTwoFamily.symmetric(0.5)), expected, atol=1e-15)

    def test_eigenstate_overlap(self, rng):
        for p in rng.uniform(size=20):
            fam = RankTwoFamily(GGHZParams.from_b(0.6), GWParams(0.6, 0.0, 0.8), p, rng.uniform(0, 6))
            psi = make_eigenstate(fam)
            assert abs(np.linalg.norm(psi) - 1) < 1e-12
            assert abs(np.vdot(make_gghz(fam.gghz), psi) - math.sqrt(p)) < 1e-12

    def test_mixture(self):
        fam = RankTwoFamily.symmetric(0.4)
        rho = make_rank2_mixture(fam)
        ev = np.linalg.eigvalsh(rho)[::-1]
        assert np.allclose(ev[:2], [0.6, 0.4]) and ev[2] < 1e-10
        expected = 0.4 * projector(ghz_state()) + 0.6 * projector(w_state())
        assert np.max(np.abs(rho - expected)) < 1e-14
        assert np.allclose(make_rank2_mixture(RankTwoFamily.symmetric(1.0)), projector(ghz_state()))
        assert np.allclose(make_rank2_mixture(RankTwoFamily.symmetric(0.0)), projector(w_state()))

    def test_rejects_p(self):
        with pytest.raises(InvalidStateError):
            RankTwoFamily.symmetric(1.5)


class TestLocalUnitaries:
    def test_identity(self, rng):
        psi = random_pure_state(rng)
        assert np.allclose(apply_local_unitary(psi, np.eye(2), np.eye(2), np.eye(2)), psi)

    def test_sigma_y_on_a(self):
        y = np.array([[0, -1j], [1j, 0]])
        out = apply_local_unitary(ket({"000": 1}), y, np.eye(2), np.eye(2))
        assert np.allclose(out, ket({"100": 1j}))

    def test_rejects_non_unitary(self):
        with pytest.raises(InvalidStateError):
            apply_local_unitary(ghz_state(), np.diag([1, 2]), np.eye(2), np.eye(2))

    def test_random_unitary(self, rng):
        u = random_unitary(rng)
        assert np.allclose(u.conj().T @ u, np.eye(2))


def test_as_pure_state_validation():
    with pytest.raises(InvalidStateError):
        as_pure_state(np.ones(8))
    with pytest.raises(InvalidStateError):
        as_pure_state(np.ones(4) / 2)
    with pytest.raises(InvalidStateError):
        as_pure_state([np.nan] + [0] * 7)


def test_random_states_seeded():
    a = random_pure_state(7, 5)
    assert np.allclose(np.linalg.norm(a, axis=1), 1)
    assert np.array_equal(a, random_pure_state(7, 5))
