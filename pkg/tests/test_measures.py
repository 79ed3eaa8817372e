import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concfill.linalg import NumericalError, partial_trace
from concfill.measures import (
    acin_closed_forms,
    bundle,
    concurrence_fill_direct,
    concurrence_fill_from_sides,
    concurrence_fill_reformulated,
    concurrence_mixed,
    concurrence_pure_bipartition,
    one_vs_rest_squared,
    pair_concurrences,
    partial_tangles,
    polygon_inequality_check,
    tangle_hyperdet,
    tangle_pure,
)
from concfill.states import (
    AcinParams,
    GGHZParams,
    apply_local_unitary,
    bell_state,
    biseparable_state,
    ghz_state,
    ket,
    make_acin_state,
    make_gghz,
    projector,
    random_acin_params,
    random_biseparable_state,
    random_product_state,
    random_pure_state,
    random_unitary,
    w_state,
)

ZERO = ket({"000": 1})
W_PAIR = 2 / 3


class TestConcurrence:
    def test_bell(self):
        assert concurrence_mixed(projector(bell_state())) == pytest.approx(1, abs=1e-12)

    def test_product(self):
        assert concurrence_mixed(np.diag([1.0, 0, 0, 0])) == pytest.approx(0, abs=1e-12)

    def test_w_marginal(self):
        rho = partial_trace(projector(w_state()), "AB")
        assert concurrence_mixed(rho) == pytest.approx(W_PAIR, abs=1e-12)

    def test_werner_threshold(self):
        # p |Bell><Bell| + (1-p) I/4 has concurrence max(0, (3p - 1)/2)
        for p in (0.2, 1 / 3, 0.5, 0.9):
            rho = p * projector(bell_state()) + (1 - p) * np.eye(4) / 4
            assert concurrence_mixed(rho) == pytest.approx(max(0, (3 * p - 1) / 2), abs=1e-12)

    def test_pure_two_qubit_matches_determinant(self, rng):
        for _ in range(50):
            v = rng.normal(size=4) + 1j * rng.normal(size=4)
            v /= np.linalg.norm(v)
            expected = 2 * abs(v[0] * v[3] - v[1] * v[2])
            assert concurrence_mixed(projector(v)) == pytest.approx(expected, abs=1e-12)

    def test_pair_concurrences_batch(self, rng):
        psis = random_pure_state(rng, 10)
        batch = pair_concurrences(psis)
        for psi, row in zip(psis, batch):
            single = [concurrence_mixed(partial_trace(projector(psi), p)) for p in ("AB", "AC", "BC")]
            assert np.allclose(row, single, atol=1e-12)


class TestPureBipartition:
    def test_values(self):
        assert concurrence_pure_bipartition(ghz_state(), "A") == pytest.approx(1)
        assert concurrence_pure_bipartition(w_state(), "A") == pytest.approx(2 * math.sqrt(2) / 3)
        for q in "ABC":
            assert concurrence_pure_bipartition(ZERO, q) == pytest.approx(0, abs=1e-15)


class TestTangle:
    def test_ghz_w(self):
        assert tangle_pure(ghz_state()) == pytest.approx(1, abs=1e-12)
        assert tangle_pure(w_state()) == pytest.approx(0, abs=1e-12)

    def test_gghz(self):
        a, b = 0.6, 0.8
        assert tangle_pure(make_gghz(GGHZParams(a, b))) == pytest.approx(4 * a * a * b * b, abs=1e-12)

    def test_pivots_and_hyperdeterminant(self, rng):
        for psi in random_pure_state(rng, 200):
            t = [tangle_pure(psi, q) for q in "ABC"]
            assert max(t) - min(t) < 1e-8
            assert tangle_hyperdet(psi) == pytest.approx(t[0], abs=1e-12)

    def test_lu_invariance_on_ghz(self, rng):
        psi = apply_local_unitary(ghz_state(), *(random_unitary(rng) for _ in range(3)))
        assert tangle_pure(psi) == pytest.approx(1, abs=1e-10)


class TestPartialTangles:
    def test_values(self):
        assert np.allclose(partial_tangles(ghz_state()), 1)
        assert np.allclose(partial_tangles(w_state()), W_PAIR)
        assert np.allclose(partial_tangles(ZERO), 0)

    def test_identity(self, rng):
        for psi in random_pure_state(rng, 300):
            b = bundle(psi)
            for tau, c in ((b.tau_ab, b.c_ab), (b.tau_ac, b.c_ac), (b.tau_bc, b.c_bc)):
                assert abs(tau**2 - (c**2 + b.tangle)) < 1e-8

    def test_biseparable_has_one_nonzero(self):
        psi = biseparable_state([1, 0], bell_state(), "A")
        t_ab, t_ac, t_bc = partial_tangles(psi)
        assert t_ab < 1e-12 and t_ac < 1e-12 and t_bc == pytest.approx(1)


class TestPolygon:
    def test_ghz(self):
        holds, margins = polygon_inequality_check(ghz_state())
        assert holds and np.allclose(margins, 1)

    def test_product(self):
        holds, margins = polygon_inequality_check(ZERO)
        assert holds and np.allclose(margins, 0)

    def test_random(self, rng):
        for psi in random_pure_state(rng, 1000):
            assert polygon_inequality_check(psi)[0]


class TestConcurrenceFill:
    def test_exact_values(self):
        assert concurrence_fill_direct(ghz_state()) == pytest.approx(1, abs=1e-12)
        assert concurrence_fill_direct(w_state()) == pytest.approx(8 / 9, abs=1e-12)
        assert concurrence_fill_direct(np.kron([1, 0], bell_state())) == pytest.approx(0, abs=1e-12)

    def test_zero_on_product_and_biseparable(self, rng):
        for _ in range(50):
            assert concurrence_fill_direct(random_product_state(rng)) < 1e-6
            for where in "ABC":
                assert concurrence_fill_direct(random_biseparable_state(rng, where)) < 1e-6

    def test_clamps_noise_and_rejects_real_violations(self):
        assert concurrence_fill_from_sides([1.0, 0.5, 0.5 - 5e-10]) == pytest.approx(0, abs=1e-4)
        with pytest.raises(NumericalError):
            concurrence_fill_from_sides([1.0, 0.2, 0.2])

    def test_reformulated_known_values(self):
        assert concurrence_fill_reformulated(1.0, (1, 1, 1)) == pytest.approx(1)
        assert concurrence_fill_reformulated(0.0, (W_PAIR,) * 3) == pytest.approx(8 / 9)

    def test_reformulated_matches_direct(self, rng):
        for psi in random_pure_state(rng, 300):
            r = concurrence_fill_reformulated(tangle_pure(psi), partial_tangles(psi))
            assert r == pytest.approx(concurrence_fill_direct(psi), abs=1e-9)

    def test_termwise_reading_differs(self, rng):
        # identical when the tangle vanishes, off by O(1) on generic states
        assert concurrence_fill_reformulated(0.0, (W_PAIR,) * 3, termwise=True) == pytest.approx(8 / 9)
        diffs = [
            abs(concurrence_fill_reformulated(tangle_pure(psi), partial_tangles(psi), termwise=True) - concurrence_fill_direct(psi))
            for psi in random_pure_state(rng, 50)
        ]
        assert max(diffs) > 0.1

    def test_lu_invariance(self, rng):
        keys = ("c_ab", "c_ac", "c_bc", "tangle", "tau_ab", "tau_ac", "tau_bc", "c_fill")
        for psi in random_pure_state(rng, 100):
            b0 = bundle(psi).as_dict()
            b1 = bundle(apply_local_unitary(psi, *(random_unitary(rng) for _ in range(3)))).as_dict()
            assert max(abs(b0[k] - b1[k]) for k in keys) < 1e-8


class TestAcin:
    def test_ghz(self):
        cf = acin_closed_forms(AcinParams((1 / math.sqrt(2), 0, 0, 0, 1 / math.sqrt(2))))
        assert cf.tangle == pytest.approx(1) and cf.c2_ab == cf.c2_ac == cf.c2_bc == 0

    def test_no_l4(self):
        assert acin_closed_forms(AcinParams((0.6, 0, 0.8, 0, 0))).tangle == 0

    def test_random_against_direct(self, rng):
        for _ in range(300):
            params = random_acin_params(rng)
            psi = make_acin_state(params)
            closed = acin_closed_forms(params)
            c2 = pair_concurrences(psi) ** 2
            assert np.allclose(closed, (tangle_pure(psi), *c2), atol=1e-9)

    def test_printed_bc_disagrees(self, rng):
        diffs = []
        for _ in range(50):
            params = random_acin_params(rng)
            diffs.append(abs(acin_closed_forms(params, printed_bc=True).c2_bc - pair_concurrences(make_acin_state(params))[2] ** 2))
        assert max(diffs) > 0.1


class TestBundle:
    def test_ghz(self):
        expected = (0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1)
        assert np.allclose(list(bundle(ghz_state()).as_dict().values()), expected, atol=1e-12)

    def test_w(self):
        s = 2 * math.sqrt(2) / 3
        expected = (W_PAIR,) * 3 + (s,) * 3 + (0,) + (W_PAIR,) * 3 + (8 / 9,)
        b = bundle(w_state())
        assert np.allclose(list(b.as_dict().values()), expected, atol=1e-12)
        assert np.allclose(b.sides, 8 / 9) and b.q == pytest.approx(4 / 3)

    def test_product(self):
        assert np.allclose(list(bundle(ZERO).as_dict().values()), 0, atol=1e-12)

    def test_invariants_and_range(self, rng):
        for psi in random_pure_state(rng, 200):
            b = bundle(psi)
            b.check_invariants()
            assert all(-1e-9 <= v <= 1 + 1e-9 for v in b.as_dict().values())

    def test_one_vs_rest_batch_shape(self, rng):
        assert one_vs_rest_squared(random_pure_state(rng, 4)).shape == (4, 3)


_amplitude = st.floats(-1.0, 1.0, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(st.lists(_amplitude, min_size=16, max_size=16).filter(lambda v: np.linalg.norm(v) > 1e-3))
def test_invariants_on_arbitrary_amplitudes(values):
    psi = np.array(values[:8]) + 1j * np.array(values[8:])
    psi /= np.linalg.norm(psi)
    b = bundle(psi)
    fields = [b.c_ab, b.c_ac, b.c_bc, b.tangle, b.tau_ab, b.tau_ac, b.tau_bc, b.c_fill]
    assert all(-1e-9 <= x <= 1 + 1e-9 for x in fields)
    assert abs(b.tangle - tangle_hyperdet(psi)) <= 1e-8
    assert b.c_fill == pytest.approx(
        concurrence_fill_reformulated(b.tangle, (b.tau_ab, b.tau_ac, b.tau_bc)), abs=1e-8
    )
    assert polygon_inequality_check(psi)[0]
