"""Separable / biseparable / W / GHZ classification of pure three-qubit states."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .measures import PAIRS, MeasureBundle, bundle
from .states import as_pure_state, example1_state

__all__ = [
    "DEFAULT_TOL",
    "ClassLabel",
    "Classification",
    "CriterionReport",
    "classify",
    "classify_pure",
    "criterion_all_pairs",
    "sweep_example1",
    "w_class_criterion",
]

DEFAULT_TOL = 1e-7
_VIOLATION_TOL = 1e-12


class ClassLabel(enum.Enum):
    FULLY_SEPARABLE = "FullySeparable"
    BISEPARABLE = "Biseparable"
    W_CLASS = "WClass"
    GHZ_CLASS = "GHZClass"
    GME_UNDETERMINED = "GMEUndetermined"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the W-class inequality ``C_F^4 >= k tau_ij^2`` for one pair."""

    pair: str
    lhs: float
    k: float
    rhs: float
    violated: bool
    label: ClassLabel


def _pair_values(b: MeasureBundle, pair: str) -> tuple[float, float]:
    key = pair.lower()
    return getattr(b, f"tau_{key}"), getattr(b, f"c_{key}")


def _normalize_pair(pair: str) -> str:
    pair = "".join(sorted(pair.upper()))
    if pair not in PAIRS:
        raise ValueError(f"unknown pair {pair!r}; expected one of {PAIRS}")
    return pair


def w_class_criterion(psi, pair: str = "BC") -> CriterionReport:
    """Evaluate the W-class inequality with ``pair`` as the distinguished pair.

    For pair (i, j) and remaining qubit m,
    ``k = (tau_mi^2 + C_mi^2)^(4/3) (tau_mj^2 + C_mj^2)^(4/3) (tau_ij^2 + C_ij^2)^(1/3)``
    and the inequality reads ``C_F^4 >= k tau_ij^2``.  A violation marks
    the state as GHZ class; compliance alone proves nothing.
    """
    psi = as_pure_state(psi)
    pair = _normalize_pair(pair)
    b = bundle(psi)
    rest = "ABC".replace(pair[0], "").replace(pair[1], "")
    t_i, c_i = _pair_values(b, "".join(sorted(rest + pair[0])))
    t_j, c_j = _pair_values(b, "".join(sorted(rest + pair[1])))
    t_ij, c_ij = _pair_values(b, pair)
    k = (t_i**2 + c_i**2) ** (4 / 3) * (t_j**2 + c_j**2) ** (4 / 3) * (t_ij**2 + c_ij**2) ** (1 / 3)
    lhs = b.c_fill**4
    rhs = k * t_ij**2
    violated = lhs < rhs - _VIOLATION_TOL
    label = ClassLabel.GHZ_CLASS if violated else ClassLabel.GME_UNDETERMINED
    return CriterionReport(pair, lhs, k, rhs, violated, label)


def criterion_all_pairs(psi) -> dict[str, CriterionReport]:
    return {pair: w_class_criterion(psi, pair) for pair in ("BC", "AC", "AB")}


def _label(b: MeasureBundle, tol: float) -> ClassLabel:
    taus = (b.tau_ab, b.tau_ac, b.tau_bc)
    small = [t < tol for t in taus]
    if all(small):
        return ClassLabel.FULLY_SEPARABLE
    if any(small):
        return ClassLabel.BISEPARABLE
    return ClassLabel.W_CLASS if b.tangle < tol else ClassLabel.GHZ_CLASS


def classify_pure(psi, tol: float = DEFAULT_TOL) -> ClassLabel:
    """Label a pure state from its partial tangles and three-tangle.

    All partial tangles below ``tol`` means fully separable, some below
    ``tol`` biseparable; otherwise the state is W class when the tangle is
    below ``tol`` and GHZ class when it is not.
    """
    return _label(bundle(as_pure_state(psi)), tol)


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    measures: MeasureBundle
    criterion: dict | None


def classify(psi, tol: float = DEFAULT_TOL) -> Classification:
    """:func:`classify_pure` plus the inequality report for every pair when GME."""
    psi = as_pure_state(psi)
    b = bundle(psi)
    label = _label(b, tol)
    crit = None
    if label in (ClassLabel.W_CLASS, ClassLabel.GHZ_CLASS):
        crit = criterion_all_pairs(psi)
    return Classification(label, b, crit)


def sweep_example1(case: int, n_points: int) -> np.ndarray:
    """Benchmark sweeps for the W-class inequality: rows of ``(d, lhs, rhs)``.

    Case 1 is ``d|010> + f|100> + e|011>`` with ``e = 1/sqrt(5)``; case 2 is
    ``c|001> + d|010> + f|100>`` with ``c = 1/sqrt(5)``.  In both
    ``d^2 + f^2 = 4/5`` and ``d`` runs over ``n_points`` evenly spaced
    interior points of ``(0, sqrt(4/5))``.
    """
    if case not in (1, 2):
        raise ValueError("case must be 1 or 2")
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    fixed = 1 / math.sqrt(5)
    d_max = math.sqrt(4 / 5)
    rows = np.empty((n_points, 3))
    for i in range(n_points):
        d = d_max * (i + 1) / (n_points + 1)
        f = math.sqrt(max(4 / 5 - d * d, 0.0))
        if case == 1:
            psi = example1_state(0.0, d, f, fixed)
        else:
            psi = example1_state(fixed, d, f, 0.0)
        rep = w_class_criterion(psi, "BC")
        rows[i] = (d, rep.lhs, rep.rhs)
    return rows
