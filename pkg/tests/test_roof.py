import numpy as np
import pytest

from concfill.linalg import InvalidStateError
from concfill.measures import concurrence_fill_direct
from concfill.mixtures import cf_upper_bound, p_zero
from concfill.roof import convex_roof_estimate
from concfill.states import (
    GGHZParams,
    GWParams,
    RankTwoFamily,
    make_rank2_mixture,
    projector,
)

SYM = RankTwoFamily.symmetric(0.0)
ASYM = RankTwoFamily(GGHZParams(0.6, 0.8), GWParams(0.3, np.sqrt(0.5), np.sqrt(0.41)), 0.0)


def rho(fam, p):
    return make_rank2_mixture(fam.at(p=p))


def test_pure_state_is_exact():
    g = GGHZParams(0.6, 0.8)
    fam = RankTwoFamily(g, GWParams.symmetric(), 1.0)
    assert convex_roof_estimate(make_rank2_mixture(fam), "tangle", budget=50).value == pytest.approx(4 * 0.36 * 0.64, abs=1e-9)
    est = convex_roof_estimate(make_rank2_mixture(fam), budget=50)
    assert est.value == pytest.approx(4 * 0.36 * 0.64, abs=1e-9)


@pytest.mark.parametrize("fam", [SYM, ASYM], ids=["symmetric", "asymmetric"])
def test_zero_tangle_regime(fam):
    p0 = p_zero(fam.gghz, fam.gw)
    for p in (1e-3, 0.05, 0.3 * p0, 0.7 * p0, p0):
        assert convex_roof_estimate(rho(fam, p), "tangle").value <= 1e-6


def test_tangle_positive_beyond_p0():
    # above p0 no zero-tangle decomposition exists
    assert convex_roof_estimate(rho(SYM, 0.9), "tangle").value > 1e-3


@pytest.mark.parametrize("p", [0.1, 0.3, 0.5])
def test_below_upper_bound(p):
    est = convex_roof_estimate(rho(SYM, p))
    assert est.value <= cf_upper_bound(SYM.gghz, SYM.gw, p) + 1e-6
    assert est.value <= cf_upper_bound(SYM.gghz, SYM.gw, p, "p0") + 1e-6


def test_returned_ensemble_realizes_the_state():
    r = rho(ASYM, 0.4)
    est = convex_roof_estimate(r, budget=200)
    assert est.size == len(est.weights) <= 4
    recon = sum(w * projector(psi) for w, psi in zip(est.weights, est.states))
    assert np.max(np.abs(recon - r)) < 1e-10
    avg = sum(w * concurrence_fill_direct(psi) for w, psi in zip(est.weights, est.states))
    assert avg == pytest.approx(est.value, abs=1e-12)


def test_deterministic_and_monotone():
    r = rho(ASYM, 0.8)
    values = [convex_roof_estimate(r, budget=b, hull_seed=False).value for b in (10, 40, 160)]
    assert values == sorted(values, reverse=True)
    assert convex_roof_estimate(r, budget=40, hull_seed=False).value == values[1]
    assert convex_roof_estimate(r, budget=40, seed=7).value == convex_roof_estimate(r, budget=40, seed=7).value


def test_random_search_alone_is_an_upper_estimate():
    r = rho(SYM, 0.3)
    assert convex_roof_estimate(r, budget=100, hull_seed=False).value >= convex_roof_estimate(r).value - 1e-9


def test_errors():
    with pytest.raises(InvalidStateError):
        convex_roof_estimate(np.eye(8) / 8)
    with pytest.raises(ValueError):
        convex_roof_estimate(rho(SYM, 0.3), budget=0)
    with pytest.raises(ValueError):
        convex_roof_estimate(rho(SYM, 0.3), measure="negativity")
