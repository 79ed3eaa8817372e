import time

import numpy as np
import pytest

from concfill.linalg import partial_trace
from concfill.measures import bundle
from concfill.oracle import (
    discrepancy_report,
    literal_eigenvalue_concurrence,
    oracle_concurrence,
    oracle_measures,
    reports_summary,
    reports_to_csv,
    run_property_suites,
)
from concfill.states import bell_state, ghz_state, projector, random_pure_state, w_state


def _as_array(b):
    return np.array(list(b.as_dict().values()))


def test_ghz_matches_fast_path():
    assert np.max(np.abs(_as_array(oracle_measures(ghz_state())) - _as_array(bundle(ghz_state())))) < 1e-10


def test_w_pair_concurrence():
    assert oracle_measures(w_state()).c_ab == pytest.approx(2 / 3, abs=1e-12)
    assert oracle_measures(w_state()).c_fill == pytest.approx(8 / 9, abs=1e-12)


def test_agreement_on_1000_random_states():
    psis = random_pure_state(np.random.default_rng(2024), 1000)
    worst = max(np.max(np.abs(_as_array(oracle_measures(p)) - _as_array(bundle(p)))) for p in psis)
    assert worst < 1e-8


def test_literal_reading():
    bell = projector(bell_state())
    w_ab = partial_trace(projector(w_state()), "AB")
    assert literal_eigenvalue_concurrence(bell) == pytest.approx(1, abs=1e-12)
    assert literal_eigenvalue_concurrence(w_ab) == pytest.approx(4 / 9, abs=1e-12)
    assert oracle_concurrence(w_ab) == pytest.approx(2 / 3, abs=1e-12)


def test_smoke_run_is_fast_and_green():
    start = time.perf_counter()
    reports = run_property_suites(seed=42, n=100)
    assert time.perf_counter() - start < 10
    assert all(r.passed for r in reports), reports_summary(reports)
    assert [r.name for r in reports] == sorted(r.name for r in reports)


def test_fault_injection_fails_acin_suite_only():
    reports = {r.name: r for r in run_property_suites(seed=42, n=100, printed_bc=True)}
    assert not reports["acin_closed_forms"].passed
    assert "c2_bc" in reports["acin_closed_forms"].detail
    assert all(r.passed for name, r in reports.items() if name != "acin_closed_forms")


def test_suites_deterministic():
    a = reports_to_csv(run_property_suites(seed=3, n=100))
    b = reports_to_csv(run_property_suites(seed=3, n=100))
    assert a == b


def test_rejects_small_n():
    with pytest.raises(ValueError):
        run_property_suites(n=50)


def test_discrepancy_rows():
    rows = {(r.name, r.note.split(";")[0]): r for r in discrepancy_report(n=50)}
    assert rows[("acin_c2_bc", "implemented")].max_abs_diff < 1e-9
    assert rows[("acin_c2_bc", "printed degree-8 form")].max_abs_diff > 0.1
    assert rows[("reformulated_sum_term", "implemented")].max_abs_diff < 1e-9
    assert rows[("reformulated_sum_term", "termwise subtraction")].max_abs_diff > 0.1
    assert rows[("eigenstate_e_symbol", "implemented")].max_abs_diff < 1e-9
    assert rows[("eigenstate_e_symbol", "alternative reading")].max_abs_diff > 0.1
