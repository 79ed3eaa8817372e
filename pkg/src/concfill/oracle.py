"""Brute-force oracles, property suites and the discrepancy report.

The oracle follows the textbook definitions literally: build ``|psi><psi|``,
trace out, form ``rho rho~``, take its eigenvalues in extended precision and
their square roots.  The oracle functions use only :mod:`concfill.linalg`,
so agreement with :mod:`concfill.measures` is independent evidence.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from . import measures as fast
from .classify import sweep_example1, w_class_criterion
from .linalg import SIGMA_YY, partial_trace, validate_density_matrix
from .measures import MeasureBundle
from .mixtures import (
    OPTIMAL_PHASES,
    cf_eigenstate_closed,
    cf_eigenstate_direct,
    cf_upper_bound,
    p_min_and_lower_bound,
    p_zero,
    rho_hat,
    tangle_eigenstate_closed,
)
from .roof import convex_roof_estimate
from .states import (
    GGHZParams,
    GWParams,
    RankTwoFamily,
    apply_local_unitary,
    as_pure_state,
    bell_state,
    example1_state,
    make_acin_state,
    make_eigenstate,
    make_gw,
    make_rank2_mixture,
    projector,
    random_acin_params,
    random_biseparable_state,
    random_product_state,
    random_pure_state,
    random_unitary,
    random_w_class_state,
    w_state,
)

__all__ = [
    "ORACLE_DPS",
    "DiscrepancyRow",
    "OracleReport",
    "discrepancy_report",
    "discrepancy_summary",
    "literal_eigenvalue_concurrence",
    "oracle_concurrence",
    "oracle_measures",
    "reports_summary",
    "reports_to_csv",
    "run_property_suites",
]

ORACLE_DPS = 30


# -- oracle ----------------------------------------------------------------


def _mp_matrix(m) -> mp.matrix:
    return mp.matrix([[mp.mpc(complex(x)) for x in row] for row in np.asarray(m)])


def _spin_flip_eigenvalues(rho) -> list:
    """Eigenvalues of ``rho rho~`` (real parts, descending) in extended precision."""
    with mp.workdps(ORACLE_DPS):
        r = _mp_matrix(rho)
        flip = _mp_matrix(SIGMA_YY) * r.conjugate() * _mp_matrix(SIGMA_YY)
        ev = mp.eig(r * flip, left=False, right=False)
        return sorted((mp.re(e) for e in ev), reverse=True)


def oracle_concurrence(rho) -> float:
    """Wootters concurrence from the square roots of ``eig(rho rho~)``."""
    rho = validate_density_matrix(rho, dims=(4,))
    with mp.workdps(ORACLE_DPS):
        lam = sorted((mp.sqrt(max(e, 0)) for e in _spin_flip_eigenvalues(rho)), reverse=True)
        return float(max(lam[0] - lam[1] - lam[2] - lam[3], 0))


def literal_eigenvalue_concurrence(rho) -> float:
    """``max(l1 - l2 - l3 - l4, 0)`` with the eigenvalues of ``rho rho~`` themselves.

    Kept for comparison only: it equals the square of the true concurrence
    whenever a single eigenvalue survives, so it agrees on Bell states and
    product states but gives 4/9 instead of 2/3 on the W reduced state.
    """
    rho = validate_density_matrix(rho, dims=(4,))
    with mp.workdps(ORACLE_DPS):
        ev = _spin_flip_eigenvalues(rho)
        return float(max(ev[0] - ev[1] - ev[2] - ev[3], 0))


def oracle_measures(psi) -> MeasureBundle:
    """Every pure-state quantity from its defining formula, in extended precision."""
    psi = as_pure_state(psi)
    rho = projector(psi)
    with mp.workdps(ORACLE_DPS):
        c2_one = {}
        for q in "ABC":
            det = mp.det(_mp_matrix(partial_trace(rho, q)))
            c2_one[q] = 4 * max(mp.re(det), 0)
        c = {pair: mp.mpf(oracle_concurrence(partial_trace(rho, pair))) for pair in ("AB", "AC", "BC")}
        tangle = c2_one["A"] - c["AB"] ** 2 - c["AC"] ** 2
        tangle = max(tangle, 0)
        tau_ab = mp.sqrt(max(c2_one["A"] - c["AC"] ** 2, 0))
        tau_ac = mp.sqrt(max(c2_one["A"] - c["AB"] ** 2, 0))
        tau_bc = mp.sqrt(max(c2_one["B"] - c["AB"] ** 2, 0))
        q = (c2_one["A"] + c2_one["B"] + c2_one["C"]) / 2
        area = mp.mpf(16) / 3 * q
        for s in c2_one.values():
            area *= max(q - s, 0)
        return MeasureBundle(
            c_ab=float(c["AB"]),
            c_ac=float(c["AC"]),
            c_bc=float(c["BC"]),
            c_a_bc=float(mp.sqrt(c2_one["A"])),
            c_b_ac=float(mp.sqrt(c2_one["B"])),
            c_c_ab=float(mp.sqrt(c2_one["C"])),
            tangle=float(tangle),
            tau_ab=float(tau_ab),
            tau_ac=float(tau_ac),
            tau_bc=float(tau_bc),
            c_fill=float(mp.root(area, 4)),
        )


# -- reports ---------------------------------------------------------------


@dataclass(frozen=True)
class OracleReport:
    """Worst case of one property suite.

    ``closed`` is the value under test and ``oracle`` the reference it is
    compared with at the worst sample; for inequalities ``oracle`` is the
    bound and ``difference`` the size of the violation (0 when it holds).
    """

    name: str
    closed: float
    oracle: float
    difference: float
    tolerance: float
    n: int
    detail: str = ""
    verdict: str = field(init=False)

    def __post_init__(self):
        ok = math.isfinite(self.difference) and self.difference <= self.tolerance
        object.__setattr__(self, "verdict", "pass" if ok else "fail")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class _Worst:
    """Track the sample with the largest discrepancy."""

    def __init__(self):
        self.diff, self.closed, self.oracle, self.detail, self.n = -math.inf, math.nan, math.nan, "", 0

    def equal(self, closed, oracle, detail):
        self.update(abs(closed - oracle), closed, oracle, detail)

    def at_least(self, value, bound, detail):
        self.update(max(bound - value, 0.0), value, bound, detail)

    def update(self, diff, closed, oracle, detail):
        self.n += 1
        if not diff <= self.diff:
            self.diff, self.closed, self.oracle, self.detail = diff, float(closed), float(oracle), detail

    def report(self, name, tol) -> OracleReport:
        return OracleReport(name, self.closed, self.oracle, max(self.diff, 0.0), tol, self.n, self.detail)


def _fmt(x) -> str:
    return np.array2string(np.asarray(x), precision=17, separator=",", max_line_width=10**6)


def _suite_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([seed, sum(ord(ch) * 31**i for i, ch in enumerate(name)) % 2**32])


def _random_family(rng) -> RankTwoFamily:
    ab = np.abs(rng.normal(size=2)) + 1e-3
    cdf = np.abs(rng.normal(size=3)) + 1e-3
    ab /= np.linalg.norm(ab)
    cdf /= np.linalg.norm(cdf)
    return RankTwoFamily(GGHZParams(*ab), GWParams(*cdf), float(rng.uniform()), float(rng.uniform(0, 2 * math.pi)))


def _suite_monogamy(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, n):
        s = fast.one_vs_rest_squared(psi)
        c2 = fast.pair_concurrences(psi) ** 2
        for i, (x, y) in enumerate(((0, 1), (0, 2), (1, 2))):
            w.at_least(s[i] - c2[x] - c2[y], 0.0, f"psi={_fmt(psi)} pivot={'ABC'[i]}")
    return w.report("monogamy", 1e-9)


def _suite_polygon(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, n):
        _, margins = fast.polygon_inequality_check(psi)
        w.at_least(min(margins), 0.0, f"psi={_fmt(psi)}")
    return w.report("polygon", 1e-9)


def _suite_permutation(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, n):
        t = [fast.tangle_pure(psi, q) for q in "ABC"]
        w.equal(max(t), min(t), f"psi={_fmt(psi)}")
    return w.report("tangle_permutation_invariance", 1e-8)


def _suite_partial_identity(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, n):
        b = fast.bundle(psi)
        for tau, c in ((b.tau_ab, b.c_ab), (b.tau_ac, b.c_ac), (b.tau_bc, b.c_bc)):
            w.equal(tau**2, c**2 + b.tangle, f"psi={_fmt(psi)}")
    return w.report("partial_tangle_identity", 1e-8)


def _reformulated(psi):
    t = fast.tangle_pure(psi)
    return fast.concurrence_fill_reformulated(t, fast.partial_tangles(psi))


def _suite_reformulation(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, n):
        w.equal(_reformulated(psi), fast.concurrence_fill_direct(psi), f"psi={_fmt(psi)}")
    for _ in range(n):
        params = random_acin_params(rng)
        psi = make_acin_state(params)
        w.equal(_reformulated(psi), fast.concurrence_fill_direct(psi), f"acin={params}")
    return w.report("reformulation", 1e-9)


def _suite_lu(rng, n):
    w = _Worst()
    keys = ("c_ab", "c_ac", "c_bc", "tangle", "tau_ab", "tau_ac", "tau_bc", "c_fill")
    for psi in random_pure_state(rng, n):
        us = [random_unitary(rng) for _ in range(3)]
        b0 = fast.bundle(psi).as_dict()
        b1 = fast.bundle(apply_local_unitary(psi, *us)).as_dict()
        diffs = [abs(b0[k] - b1[k]) for k in keys]
        k = int(np.argmax(diffs))
        w.equal(b1[keys[k]], b0[keys[k]], f"psi={_fmt(psi)} quantity={keys[k]}")
    return w.report("lu_invariance", 1e-8)


def _suite_acin(rng, n, printed_bc):
    w = _Worst()
    for _ in range(n):
        params = random_acin_params(rng)
        psi = make_acin_state(params)
        closed = fast.acin_closed_forms(params, printed_bc=printed_bc)
        c2 = fast.pair_concurrences(psi) ** 2
        direct = (fast.tangle_pure(psi), c2[0], c2[1], c2[2])
        for name, a, b in zip(("tangle", "c2_ab", "c2_ac", "c2_bc"), closed, direct):
            w.equal(a, b, f"acin={params} quantity={name}")
    return w.report("acin_closed_forms", 1e-9)


def _eigenstate_grid(rng, n_families):
    fams = [RankTwoFamily.symmetric(0.5)] + [_random_family(rng) for _ in range(n_families - 1)]
    for fam in fams:
        for p in np.linspace(0.0, 1.0, 11):
            for phi in np.linspace(0.0, 2 * math.pi, 7):
                yield fam.at(float(p), float(phi))


def _suite_eigenstate_cf(rng, n):
    w = _Worst()
    for fam in _eigenstate_grid(rng, max(2, n // 50)):
        w.equal(cf_eigenstate_closed(fam).c_fill, cf_eigenstate_direct(fam), f"family={fam}")
    return w.report("eigenstate_cf_closed_form", 1e-8)


def _suite_eigenstate_tangle(rng, n):
    w = _Worst()
    for fam in _eigenstate_grid(rng, max(2, n // 50)):
        w.equal(tangle_eigenstate_closed(fam), fast.tangle_pure(make_eigenstate(fam)), f"family={fam}")
    return w.report("eigenstate_tangle_closed_form", 1e-8)


def _suite_decomposition(rng, n):
    w = _Worst()
    fams = [RankTwoFamily.symmetric(0.0)] + [_random_family(rng) for _ in range(max(1, n // 100))]
    for fam in fams:
        g, gw = fam.gghz, fam.gw
        p0 = p_zero(g, gw)
        hat0 = rho_hat(g, gw, p0)
        omega = projector(make_gw(gw))
        for p in np.linspace(0.0, p0, 50):
            lhs = p / p0 * hat0 + (p0 - p) / p0 * omega
            rhs = make_rank2_mixture(fam.at(p=float(p)))
            err = float(np.max(np.abs(lhs - rhs)))
            w.update(err, err, 0.0, f"family={fam.at(p=float(p))}")
    return w.report("decomposition_identity", 1e-12)


def _suite_zero_tangle(rng, n):
    w = _Worst()
    fams = [RankTwoFamily.symmetric(0.0)] + [_random_family(rng) for _ in range(max(1, n // 10))]
    for fam in fams:
        p0 = p_zero(fam.gghz, fam.gw)
        for phi in OPTIMAL_PHASES:
            t = fast.tangle_pure(make_eigenstate(fam.at(p0, phi)))
            w.update(t, t, 0.0, f"family={fam.at(p0, phi)}")
    return w.report("zero_tangle_elements", 1e-9)


def _suite_lower_bound(rng, n):
    w = _Worst()
    bs = np.sqrt(rng.uniform(0.01, 2 / 3, size=max(2, n // 50)))
    for b in bs:
        g = GGHZParams.from_b(float(b))
        _, lower = p_min_and_lower_bound(g)
        for p in np.linspace(0.01, 0.99, 50):
            fam = RankTwoFamily(g, GWParams.symmetric(), float(p), 0.0)
            w.at_least(cf_eigenstate_closed(fam).c_fill, lower - 1e-9, f"family={fam}")
    return w.report("lower_bound", 0.0)


def _suite_upper_bound(rng, n):
    """Numerical convex roofs against the analytic bounds (the costly suite)."""
    w = _Worst()
    fams = [RankTwoFamily.symmetric(p) for p in (0.1, 0.3, 0.5)]
    for _ in range(max(1, n // 200)):
        fam = _random_family(rng)
        fams.append(fam.at(p=float(rng.uniform(0, p_zero(fam.gghz, fam.gw)))))
    for k, fam in enumerate(fams):
        rho = make_rank2_mixture(fam)
        bound = cf_upper_bound(fam.gghz, fam.gw, fam.p, variant="p0")
        if fam.gghz == GGHZParams.symmetric() and fam.gw == GWParams.symmetric():
            bound = min(bound, cf_upper_bound(fam.gghz, fam.gw, fam.p))
        est = convex_roof_estimate(rho, "concurrence_fill", seed=k).value
        w.update(max(est - bound, 0.0), est, bound, f"family={fam} measure=concurrence_fill")
        t = convex_roof_estimate(rho, "tangle", seed=k).value
        w.update(t, t, 0.0, f"family={fam} measure=tangle")
    return w.report("upper_bound_ordering", 1e-6)


def _suite_oracle(rng, n):
    w = _Worst()
    for psi in random_pure_state(rng, max(1, n // 5)):
        a = fast.bundle(psi).as_dict()
        b = oracle_measures(psi).as_dict()
        k = max(a, key=lambda key: abs(a[key] - b[key]))
        w.equal(a[k], b[k], f"psi={_fmt(psi)} quantity={k}")
    return w.report("oracle_agreement", 1e-8)


def _suite_w_inequality(rng, n):
    w = _Worst()
    for _ in range(max(1, n // 2)):
        psi = random_w_class_state(rng)
        rep = w_class_criterion(psi)
        w.at_least(rep.lhs, rep.rhs - 1e-9, f"psi={_fmt(psi)}")
    return w.report("w_class_inequality", 0.0)


def _suite_cf_zero(rng, n):
    w = _Worst()
    for _ in range(max(1, n // 10)):
        psi = random_product_state(rng)
        w.update(fast.concurrence_fill_direct(psi), fast.concurrence_fill_direct(psi), 0.0, f"psi={_fmt(psi)}")
        for where in "ABC":
            psi = random_biseparable_state(rng, where)
            cf = fast.concurrence_fill_direct(psi)
            w.update(cf, cf, 0.0, f"psi={_fmt(psi)}")
    return w.report("cf_zero_on_separable", 1e-6)


def run_property_suites(seed: int = 42, n: int = 1000, printed_bc: bool = False) -> list[OracleReport]:
    """Run every property suite and return one report per suite, sorted by name.

    ``n`` is the sample count of the cheap suites; the costlier ones scale
    it down (oracle agreement ``n/5``, W-class inequality ``n/2``, convex roofs
    three fixed points plus ``n/200`` random families).  ``printed_bc``
    swaps in the printed ``C^2_BC`` closed form, which makes the Acin suite
    fail.
    """
    if n < 100:
        raise ValueError("n must be at least 100")
    suites = {
        "monogamy": _suite_monogamy,
        "polygon": _suite_polygon,
        "tangle_permutation_invariance": _suite_permutation,
        "partial_tangle_identity": _suite_partial_identity,
        "reformulation": _suite_reformulation,
        "lu_invariance": _suite_lu,
        "acin_closed_forms": lambda rng, n: _suite_acin(rng, n, printed_bc),
        "eigenstate_cf_closed_form": _suite_eigenstate_cf,
        "eigenstate_tangle_closed_form": _suite_eigenstate_tangle,
        "decomposition_identity": _suite_decomposition,
        "zero_tangle_elements": _suite_zero_tangle,
        "lower_bound": _suite_lower_bound,
        "upper_bound_ordering": _suite_upper_bound,
        "oracle_agreement": _suite_oracle,
        "w_class_inequality": _suite_w_inequality,
        "cf_zero_on_separable": _suite_cf_zero,
    }
    reports = [fn(_suite_rng(seed, name), n) for name, fn in suites.items()]
    return sorted(reports, key=lambda r: r.name)


_REPORT_FIELDS = ("name", "closed", "oracle", "difference", "tolerance", "n", "verdict", "detail")


def reports_to_csv(rows, fields=_REPORT_FIELDS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_cell(getattr(row, f)) for f in fields])
    return buf.getvalue()


def _cell(v):
    return format(v, ".17g") if isinstance(v, float) else v


def reports_summary(reports) -> str:
    lines = []
    for r in reports:
        lines.append(f"{r.verdict.upper():4}  {r.name:32} max diff {r.difference:.3e} (tol {r.tolerance:.0e}, n={r.n})")
        if not r.passed:
            lines.append(f"      worst sample: {r.detail}")
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} suites passed")
    return "\n".join(lines)


# -- discrepancy report -----------------------------------------------------


@dataclass(frozen=True)
class DiscrepancyRow:
    """One printed formula (``reading``) measured against direct evaluation."""

    name: str
    reading: str
    value: float
    reference: float
    max_abs_diff: float
    n: int
    note: str


def _max_diff(pairs):
    pairs = list(pairs)
    diffs = [abs(a - b) for a, b in pairs]
    k = int(np.argmax(diffs))
    return pairs[k][0], pairs[k][1], diffs[k], len(pairs)


def discrepancy_report(seed: int = 42, n: int = 200) -> list[DiscrepancyRow]:
    """Quantify every known mismatch between printed formulas and direct evaluation.

    Nothing here fails: each row records the largest deviation found for a
    reading, next to the reading actually implemented.
    """
    rng = np.random.default_rng(seed)
    rows = []

    # C^2_BC of the five-term canonical form
    acin = [random_acin_params(rng) for _ in range(n)]
    direct = [fast.pair_concurrences(make_acin_state(a))[2] ** 2 for a in acin]
    for reading, printed in (("4(l2^2 l3^2 - l1^2 l4^2)^2", True), ("4|l2 l3 - l1 l4 e^{i theta}|^2", False)):
        vals = [fast.acin_closed_forms(a, printed_bc=printed).c2_bc for a in acin]
        rows.append(
            DiscrepancyRow(
                "acin_c2_bc",
                reading,
                *_max_diff(zip(vals, direct)),
                "printed degree-8 form" if printed else "implemented",
            )
        )

    # sum term of the tangle-based concurrence fill
    states = random_pure_state(rng, n)
    direct = [fast.concurrence_fill_direct(s) for s in states]
    for reading, termwise in (("sum_ij (tau_ij^2 - 3 tau/2)", True), ("sum_ij tau_ij^2 - 3 tau/2", False)):
        vals = [
            fast.concurrence_fill_reformulated(fast.tangle_pure(s), fast.partial_tangles(s), termwise=termwise)
            for s in states
        ]
        rows.append(
            DiscrepancyRow(
                "reformulated_sum_term",
                reading,
                *_max_diff(zip(vals, direct)),
                "termwise subtraction" if termwise else "implemented",
            )
        )

    # the symbol e in the eigenstate y factor, on asymmetric W parts
    fams = []
    for _ in range(n // 10):
        fam = _random_family(rng)
        fams.extend(fam.at(p=float(p), phi=0.0) for p in np.linspace(0.05, 0.95, 10))
    direct = [cf_eigenstate_direct(f) for f in fams]
    for sym in ("c", "d", "f"):
        vals = [cf_eigenstate_closed(f, e=getattr(f.gw, sym)).c_fill for f in fams]
        note = "implemented" if sym == "c" else "alternative reading"
        rows.append(DiscrepancyRow("eigenstate_e_symbol", f"e = {sym}", *_max_diff(zip(vals, direct)), note))

    # phase factors e^{2i phi}, e^{4i phi} in the same triple
    fams = [f.at(phi=float(phi)) for f in fams[::10] for phi in np.linspace(0, 2 * math.pi, 13)]
    direct = [cf_eigenstate_direct(f) for f in fams]
    for reading, printed in (("with e^{2i phi}, e^{4i phi}", True), ("phase free", False)):
        vals = [cf_eigenstate_closed(f, printed_phases=printed).c_fill for f in fams]
        note = "printed phases" if printed else "implemented; the concurrence fill does not depend on phi"
        rows.append(DiscrepancyRow("eigenstate_phases", reading, *_max_diff(zip(vals, direct)), note))

    # tangle of the case 1 benchmark family
    e = 1 / math.sqrt(5)
    ds = np.sqrt(4 / 5) * np.arange(1, 21) / 21
    pairs = []
    for d in ds:
        f = math.sqrt(4 / 5 - d * d)
        pairs.append((e * e * f * f, fast.tangle_pure(example1_state(0.0, d, f, e))))
    rows.append(DiscrepancyRow("example1_case1_tangle", "e^2 f^2", *_max_diff(pairs), "direct value is 4 e^2 f^2"))
    pairs4 = [(4 * a, b) for a, b in pairs]
    rows.append(DiscrepancyRow("example1_case1_tangle", "4 e^2 f^2", *_max_diff(pairs4), "implemented (direct)"))

    # margin of the W-class inequality where it is claimed to be violated
    data = sweep_example1(1, 100)
    margin = data[:, 1] - data[:, 2]
    k = int(np.argmin(margin))
    rows.append(
        DiscrepancyRow(
            "example1_case1_violation",
            "min(lhs - rhs) over 100 points",
            float(data[k, 1]),
            float(data[k, 2]),
            float(margin[k]),
            100,
            f"violations: {int(np.sum(margin < -1e-12))}",
        )
    )
    worst = math.inf
    for psi in random_pure_state(rng, n):
        for rep in (w_class_criterion(psi, pair) for pair in ("AB", "AC", "BC")):
            worst = min(worst, rep.lhs - rep.rhs)
    rows.append(
        DiscrepancyRow(
            "w_inequality_random_states",
            "min(lhs - rhs) over random states and pairs",
            worst,
            0.0,
            max(-worst, 0.0),
            3 * n,
            "nonnegative means no state violates it",
        )
    )

    # where the stationary point of C_F(p) stops being the minimum
    bad = []
    for b in np.linspace(0.1, 0.95, 20):
        g = GGHZParams.from_b(float(b))
        ps = np.linspace(0.0, 1.0, 2001)
        vals = [cf_eigenstate_closed(RankTwoFamily(g, GWParams.symmetric(), float(p))).c_fill for p in ps]
        bad.append((float(ps[int(np.argmin(vals))]), 1 / (1 + 3 * b * b)))
    value, reference, diff, count = _max_diff(bad)
    rows.append(
        DiscrepancyRow(
            "result_p_min",
            "1/(1+3b^2) vs grid argmin, b in [0.1, 0.95]",
            value,
            reference,
            diff,
            count,
            "stationary point is a maximum for b^2 > 2/3",
        )
    )

    # Wootters reading
    w_ab = partial_trace(projector(w_state()), "AB")
    bell = projector(bell_state())
    rows.append(
        DiscrepancyRow(
            "wootters_reading",
            "eigenvalues of rho rho~ (Bell)",
            literal_eigenvalue_concurrence(bell),
            oracle_concurrence(bell),
            abs(literal_eigenvalue_concurrence(bell) - oracle_concurrence(bell)),
            1,
            "both readings give 1",
        )
    )
    rows.append(
        DiscrepancyRow(
            "wootters_reading",
            "eigenvalues of rho rho~ (W, pair AB)",
            literal_eigenvalue_concurrence(w_ab),
            oracle_concurrence(w_ab),
            abs(literal_eigenvalue_concurrence(w_ab) - oracle_concurrence(w_ab)),
            1,
            "square roots are required",
        )
    )

    # symmetric zero-tangle endpoint
    p0 = p_zero(GGHZParams.symmetric(), GWParams.symmetric())
    rows.append(
        DiscrepancyRow("p_zero_symmetric", "0.626897", 0.626897, p0, abs(0.626897 - p0), 1, "quoted decimal")
    )
    return rows


def discrepancy_summary(rows) -> str:
    lines = []
    for r in rows:
        lines.append(f"{r.name:28} {r.reading:46} max |diff| {r.max_abs_diff:.3e} (n={r.n}) {r.note}")
    return "\n".join(lines)
