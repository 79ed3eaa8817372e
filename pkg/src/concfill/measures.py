"""Concurrences, three-tangle, partial tangles and concurrence fill.

Functions taking a pure state accept either a single ket of shape ``(8,)``
(returning Python floats) or a stack of kets of shape ``(n, 8)`` (returning
arrays); the batched form is what the convex-roof search uses.

Pairwise concurrences use the Wootters construction.  For a two-qubit
``rho = V V^dagger`` the Wootters values lambda_i (square roots of the
eigenvalues of ``rho rho~``) are the singular values of ``V^T (Y(x)Y) V``.
Taking singular values directly avoids the square root of tiny eigenvalues
and keeps the zero modes at ~1e-16 instead of ~1e-8.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .linalg import SIGMA_YY, NumericalError, validate_density_matrix
from .states import AcinParams

__all__ = [
    "CLAMP_HARD",
    "CLAMP_SOFT",
    "PAIRS",
    "AcinClosedForms",
    "MeasureBundle",
    "acin_closed_forms",
    "bundle",
    "concurrence_fill_direct",
    "concurrence_fill_from_sides",
    "concurrence_fill_reformulated",
    "concurrence_mixed",
    "concurrence_pure_bipartition",
    "one_vs_rest_squared",
    "pair_concurrences",
    "partial_tangles",
    "polygon_inequality_check",
    "tangle_hyperdet",
    "tangle_pure",
]

#: negatives down to this size are float noise and clamp to zero
CLAMP_SOFT = 1e-9
#: negatives beyond this size signal a broken input or formula
CLAMP_HARD = 1e-6

#: qubit pairs in the order used for pairwise quantities
PAIRS = ("AB", "AC", "BC")
_PAIR_AXES = {"AB": (0, 1, 2), "AC": (0, 2, 1), "BC": (1, 2, 0)}


def _clamp(x, what: str):
    x = np.asarray(x, dtype=float)
    worst = np.min(x) if x.size else 0.0
    if worst < -CLAMP_HARD:
        raise NumericalError(f"{what} is {worst:.3g}, below -{CLAMP_HARD:g}")
    return np.maximum(x, 0.0)


def _as_batch(psi):
    psi = np.asarray(psi, dtype=complex)
    if psi.shape[-1] != 8:
        raise ValueError(f"expected kets of length 8, got shape {psi.shape}")
    return psi.reshape(psi.shape[:-1] + (2, 2, 2)), psi.ndim == 1


def _out(v, single):
    return float(v) if single else v


def _wootters(v):
    """Concurrence of ``V V^dagger`` for stacked ``V`` of shape (..., 4, r)."""
    t = np.swapaxes(v, -1, -2) @ SIGMA_YY @ v
    s = np.linalg.svd(t, compute_uv=False)
    if s.shape[-1] < 4:
        pad = np.zeros(s.shape[:-1] + (4 - s.shape[-1],))
        s = np.concatenate([s, pad], axis=-1)
    return np.maximum(s[..., 0] - s[..., 1] - s[..., 2] - s[..., 3], 0.0)


def concurrence_mixed(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    ``max(l1 - l2 - l3 - l4, 0)`` where ``l_i`` are the square roots of the
    eigenvalues of ``rho (Y(x)Y) rho* (Y(x)Y)`` in descending order.
    """
    rho = validate_density_matrix(rho, dims=(4,))
    w, u = np.linalg.eigh(rho)
    v = u * np.sqrt(np.clip(w, 0.0, None))
    return float(_wootters(v))


def one_vs_rest_squared(psi):
    """Squared concurrences ``C^2_{A|BC}, C^2_{B|AC}, C^2_{C|AB}`` (= 4 det rho_i)."""
    t, single = _as_batch(psi)
    out = []
    for spec in ("...ajk,...bjk->...ab", "...iak,...ibk->...ab", "...ija,...ijb->...ab"):
        r = np.einsum(spec, t, t.conj())
        out.append(4 * (r[..., 0, 0].real * r[..., 1, 1].real - np.abs(r[..., 0, 1]) ** 2))
    s = _clamp(np.stack(out, axis=-1), "4 det(rho_i)")
    return s if not single else s.reshape(3)


def pair_concurrences(psi):
    """Pairwise concurrences ``(C_AB, C_AC, C_BC)`` of the two-qubit marginals."""
    t, single = _as_batch(psi)
    lead = tuple(range(t.ndim - 3))
    out = []
    for pair in PAIRS:
        axes = lead + tuple(len(lead) + i for i in _PAIR_AXES[pair])
        v = np.transpose(t, axes).reshape(t.shape[:-3] + (4, 2))
        out.append(_wootters(v))
    c = np.stack(out, axis=-1)
    return c if not single else c.reshape(3)


def concurrence_pure_bipartition(psi, pivot: str = "A") -> float:
    """``C_{pivot|rest} = 2 sqrt(det rho_pivot)`` for a pure three-qubit state."""
    idx = "ABC".index(pivot.upper())
    s = one_vs_rest_squared(psi)
    return _out(np.sqrt(s[..., idx]), np.ndim(psi) == 1)


def tangle_pure(psi, pivot: str = "A"):
    """Three-tangle ``C^2_{i|jk} - C^2_{ij} - C^2_{ik}`` with ``i = pivot``."""
    idx = "ABC".index(pivot.upper())
    s = one_vs_rest_squared(psi)
    c2 = pair_concurrences(psi) ** 2
    others = {0: (0, 1), 1: (0, 2), 2: (1, 2)}[idx]
    tau = _clamp(s[..., idx] - c2[..., others[0]] - c2[..., others[1]], "three-tangle")
    return _out(tau, np.ndim(psi) == 1)


def tangle_hyperdet(psi):
    """Three-tangle as ``4 |Det(psi)|`` with Det the Cayley hyperdeterminant.

    Equal to :func:`tangle_pure` for normalized kets and homogeneous of
    degree four in the amplitudes.
    """
    t, single = _as_batch(psi)

    def a(i, j, k):
        return t[..., i, j, k]

    d1 = (
        a(0, 0, 0) ** 2 * a(1, 1, 1) ** 2
        + a(0, 0, 1) ** 2 * a(1, 1, 0) ** 2
        + a(0, 1, 0) ** 2 * a(1, 0, 1) ** 2
        + a(1, 0, 0) ** 2 * a(0, 1, 1) ** 2
    )
    d2 = (
        a(0, 0, 0) * a(1, 1, 1) * (a(0, 1, 1) * a(1, 0, 0) + a(1, 0, 1) * a(0, 1, 0) + a(1, 1, 0) * a(0, 0, 1))
        + a(0, 1, 1) * a(1, 0, 0) * (a(1, 0, 1) * a(0, 1, 0) + a(1, 1, 0) * a(0, 0, 1))
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1)
    )
    d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0)
    return _out(4 * np.abs(d1 - 2 * d2 + 4 * d3), single)


def _partial_from(s, c2):
    # tau_ij^2 = C^2_{i|jk} - C^2_{ik}
    rad = np.stack([s[..., 0] - c2[..., 1], s[..., 0] - c2[..., 0], s[..., 1] - c2[..., 0]], axis=-1)
    return np.sqrt(_clamp(rad, "partial-tangle radicand"))


def partial_tangles(psi):
    """Partial tangles ``(tau_AB, tau_AC, tau_BC)``.

    ``tau_ij = sqrt(C^2_{i|jk} - C^2_{ik})``; e.g. ``tau_BC`` uses the
    B|AC cut and the B-A pair concurrence.
    """
    single = np.ndim(psi) == 1
    out = _partial_from(one_vs_rest_squared(psi), pair_concurrences(psi) ** 2)
    return tuple(float(x) for x in out) if single else out


def polygon_inequality_check(psi) -> tuple[bool, tuple[float, float, float]]:
    """Check ``C^2_{i|jk} <= C^2_{j|ki} + C^2_{k|ij}`` for every qubit i.

    Returns ``(holds, margins)`` with margins ordered by the excluded qubit
    A, B, C.
    """
    s = one_vs_rest_squared(psi)
    margins = s.sum(axis=-1, keepdims=True) - 2 * s
    return bool(np.all(margins >= -CLAMP_SOFT)), tuple(float(m) for m in margins)


def concurrence_fill_from_sides(sides):
    """Concurrence fill from the squared one-vs-rest concurrences (last axis)."""
    s = np.asarray(sides, dtype=float)
    q = 0.5 * s.sum(axis=-1)
    factors = _clamp(q[..., None] - s, "triangle factor Q - C^2")
    area = 16.0 / 3.0 * q * np.prod(factors, axis=-1)
    cf = area**0.25
    return float(cf) if s.ndim == 1 else cf


def concurrence_fill_direct(psi):
    """Concurrence fill ``[16/3 Q prod_i (Q - C^2_{i|jk})]^(1/4)`` of a pure state."""
    return concurrence_fill_from_sides(one_vs_rest_squared(psi))


def concurrence_fill_reformulated(tangle: float, partials, termwise: bool = False) -> float:
    """Concurrence fill from the three-tangle and the partial tangles.

    With ``t2 = tau_ij^2`` the triangle factors are ``t2 - tangle/2`` and the
    semi-perimeter is ``sum(t2) - 3 tangle / 2``.  ``termwise=True`` instead
    subtracts ``3 tangle / 2`` from every ``t2`` in the sum; that reading
    disagrees with the direct formula whenever the tangle is non-zero and is
    kept only so the difference can be quantified; its semi-perimeter can be
    negative, so the modulus is taken under the fourth root.
    """
    t2 = np.asarray(partials, dtype=float) ** 2
    factors = _clamp(t2 - tangle / 2, "triangle factor tau_ij^2 - tau/2")
    if termwise:
        return float(abs(16.0 / 3.0 * np.prod(factors) * np.sum(t2 - 1.5 * tangle)) ** 0.25)
    q = float(_clamp(np.sum(t2) - 1.5 * tangle, "semi-perimeter"))
    return float((16.0 / 3.0 * np.prod(factors) * q) ** 0.25)


class AcinClosedForms(NamedTuple):
    tangle: float
    c2_ab: float
    c2_ac: float
    c2_bc: float


def acin_closed_forms(params: AcinParams, printed_bc: bool = False) -> AcinClosedForms:
    """Tangle and squared pair concurrences of a canonical-form state in closed form.

    ``C^2_BC = 4 |l2 l3 - l1 l4 e^{i theta}|^2``.  With ``printed_bc=True``
    the degree-eight variant ``4 (l2^2 l3^2 - l1^2 l4^2)^2`` is returned
    instead; it does not match direct evaluation.
    """
    l0, l1, l2, l3, l4 = params.lambdas
    if printed_bc:
        c2_bc = 4 * (l2**2 * l3**2 - l1**2 * l4**2) ** 2
    else:
        c2_bc = 4 * abs(l2 * l3 - l1 * l4 * np.exp(1j * params.theta)) ** 2
    return AcinClosedForms(4 * l0**2 * l4**2, 4 * l0**2 * l3**2, 4 * l0**2 * l2**2, float(c2_bc))


@dataclass(frozen=True)
class MeasureBundle:
    c_ab: float
    c_ac: float
    c_bc: float
    c_a_bc: float
    c_b_ac: float
    c_c_ab: float
    tangle: float
    tau_ab: float
    tau_ac: float
    tau_bc: float
    c_fill: float

    @property
    def sides(self) -> tuple[float, float, float]:
        """Squared one-vs-rest concurrences, the sides of the concurrence triangle."""
        return (self.c_a_bc**2, self.c_b_ac**2, self.c_c_ab**2)

    @property
    def q(self) -> float:
        return 0.5 * sum(self.sides)

    def as_dict(self) -> dict:
        return asdict(self)

    def check_invariants(self, tol: float = 1e-8) -> None:
        for name, value in self.as_dict().items():
            if not -CLAMP_SOFT <= value <= 1 + CLAMP_SOFT:
                raise NumericalError(f"{name}={value!r} outside [0, 1]")
        if abs(self.tangle - (self.c_a_bc**2 - self.c_ab**2 - self.c_ac**2)) > tol:
            raise NumericalError("tangle does not match the CKW residual")
        for tau, c in ((self.tau_ab, self.c_ab), (self.tau_ac, self.c_ac), (self.tau_bc, self.c_bc)):
            if abs(tau**2 - (c**2 + self.tangle)) > tol:
                raise NumericalError("partial tangle identity tau_ij^2 = C_ij^2 + tau fails")


def bundle(psi) -> MeasureBundle:
    """Every pure-state quantity in one record."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (8,):
        raise ValueError("bundle expects a single ket")
    s = one_vs_rest_squared(psi)
    c = pair_concurrences(psi)
    c2 = c**2
    tau = float(_clamp(s[0] - c2[0] - c2[1], "three-tangle"))
    parts = _partial_from(s, c2)
    return MeasureBundle(
        c_ab=float(c[0]),
        c_ac=float(c[1]),
        c_bc=float(c[2]),
        c_a_bc=math.sqrt(s[0]),
        c_b_ac=math.sqrt(s[1]),
        c_c_ab=math.sqrt(s[2]),
        tangle=tau,
        tau_ab=float(parts[0]),
        tau_ac=float(parts[1]),
        tau_bc=float(parts[2]),
        c_fill=concurrence_fill_from_sides(s),
    )
