"""Constructors for the three-qubit pure states and mixtures used throughout.

All pure states are length-8 complex vectors in the basis |000>, ..., |111>
with qubit A the most significant bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import unitary_group

from .linalg import INPUT_TOL, InvalidStateError

__all__ = [
    "NORM_TOL",
    "AcinParams",
    "GGHZParams",
    "GWParams",
    "RankTwoFamily",
    "apply_local_unitary",
    "as_pure_state",
    "bell_state",
    "biseparable_state",
    "example1_state",
    "ghz_state",
    "ket",
    "make_acin_state",
    "make_eigenstate",
    "make_gghz",
    "make_gw",
    "make_rank2_mixture",
    "product_state",
    "projector",
    "random_acin_params",
    "random_biseparable_state",
    "random_product_state",
    "random_pure_state",
    "random_unitary",
    "random_w_class_state",
    "same_up_to_phase",
    "w_state",
]

NORM_TOL = 1e-10


def _check_unit(total: float, what: str, tol: float = NORM_TOL):
    if abs(total - 1.0) > tol:
        raise InvalidStateError(f"{what} must equal 1, got {total:.15g}")


@dataclass(frozen=True)
class AcinParams:
    """Coefficients of the five-term canonical form.

    ``lambdas`` holds the non-negative amplitudes of |000>, |100>, |101>,
    |110>, |111> in that order and ``theta`` the phase on |100>.
    """

    lambdas: tuple
    theta: float = 0.0

    def __post_init__(self):
        lam = tuple(float(x) for x in self.lambdas)
        if len(lam) != 5:
            raise InvalidStateError("expected five canonical-form amplitudes")
        if min(lam) < 0:
            raise InvalidStateError("canonical-form amplitudes must be non-negative")
        _check_unit(sum(x * x for x in lam), "sum of squared amplitudes")
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidStateError(f"theta={self.theta} outside [0, pi]")
        object.__setattr__(self, "lambdas", lam)


@dataclass(frozen=True)
class GGHZParams:
    a: float
    b: float

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InvalidStateError("a and b must be non-negative")
        _check_unit(self.a**2 + self.b**2, "a^2 + b^2")

    @classmethod
    def from_b(cls, b: float) -> GGHZParams:
        return cls(math.sqrt(max(1.0 - b * b, 0.0)), b)

    @classmethod
    def symmetric(cls) -> GGHZParams:
        return cls(math.sqrt(0.5), math.sqrt(0.5))


@dataclass(frozen=True)
class GWParams:
    c: float
    d: float
    f: float

    def __post_init__(self):
        if min(self.c, self.d, self.f) < 0:
            raise InvalidStateError("c, d and f must be non-negative")
        _check_unit(self.c**2 + self.d**2 + self.f**2, "c^2 + d^2 + f^2")

    @classmethod
    def symmetric(cls) -> GWParams:
        s = 1 / math.sqrt(3)
        return cls(s, s, s)


@dataclass(frozen=True)
class RankTwoFamily:
    """Mixture ``p |gGHZ><gGHZ| + (1-p) |gW><gW|`` and its superpositions."""

    gghz: GGHZParams
    gw: GWParams
    p: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise InvalidStateError(f"p={self.p} outside [0, 1]")

    @classmethod
    def symmetric(cls, p: float, phi: float = 0.0) -> RankTwoFamily:
        return cls(GGHZParams.symmetric(), GWParams.symmetric(), p, phi)

    def at(self, p: float | None = None, phi: float | None = None) -> RankTwoFamily:
        return RankTwoFamily(
            self.gghz, self.gw, self.p if p is None else p, self.phi if phi is None else phi
        )


def as_pure_state(psi, tol: float = NORM_TOL) -> np.ndarray:
    """Validate a three-qubit ket and return it as a complex array."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (8,):
        raise InvalidStateError(f"expected 8 amplitudes, got shape {psi.shape}")
    if not np.all(np.isfinite(psi)):
        raise InvalidStateError("amplitudes must be finite")
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > tol:
        raise InvalidStateError(f"state norm is {norm:.12g}, expected 1")
    return psi


def ket(amplitudes: dict) -> np.ndarray:
    """Build an (unnormalized) vector from ``{"010": amp, ...}``."""
    v = np.zeros(8, dtype=complex)
    for bits, amp in amplitudes.items():
        v[int(bits, 2)] += amp
    return v


def ghz_state() -> np.ndarray:
    return ket({"000": 1, "111": 1}) / math.sqrt(2)


def w_state() -> np.ndarray:
    return ket({"001": 1, "010": 1, "100": 1}) / math.sqrt(3)


def bell_state() -> np.ndarray:
    """Two-qubit (|00> + |11>)/sqrt(2)."""
    return np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)


def product_state(x, y, z) -> np.ndarray:
    return np.kron(np.kron(x, y), z).astype(complex)


def biseparable_state(single, pair, placement: str = "A") -> np.ndarray:
    """Single-qubit state on ``placement`` tensored with a two-qubit state on the rest."""
    t = np.multiply.outer(np.asarray(single, complex), np.asarray(pair, complex).reshape(2, 2))
    order = {"A": (0, 1, 2), "B": (1, 0, 2), "C": (1, 2, 0)}[placement.upper()]
    return np.transpose(t, order).reshape(8)


def example1_state(c: float, d: float, f: float, e: float) -> np.ndarray:
    """``c|001> + d|010> + f|100> + e|011>`` (must be normalized by the caller)."""
    return as_pure_state(ket({"001": c, "010": d, "100": f, "011": e}))


def make_acin_state(params: AcinParams) -> np.ndarray:
    l0, l1, l2, l3, l4 = params.lambdas
    psi = ket(
        {"000": l0, "100": l1 * np.exp(1j * params.theta), "101": l2, "110": l3, "111": l4}
    )
    return as_pure_state(psi)


def make_gghz(params: GGHZParams) -> np.ndarray:
    return as_pure_state(ket({"000": params.a, "111": params.b}))


def make_gw(params: GWParams) -> np.ndarray:
    return as_pure_state(ket({"001": params.c, "010": params.d, "100": params.f}))


def make_eigenstate(fam: RankTwoFamily) -> np.ndarray:
    """``sqrt(p)|gGHZ> - sqrt(1-p) e^{i phi} |gW>``."""
    psi = math.sqrt(fam.p) * make_gghz(fam.gghz) - math.sqrt(1 - fam.p) * np.exp(
        1j * fam.phi
    ) * make_gw(fam.gw)
    return as_pure_state(psi, tol=1e-12)


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def make_rank2_mixture(fam: RankTwoFamily) -> np.ndarray:
    return fam.p * projector(make_gghz(fam.gghz)) + (1 - fam.p) * projector(make_gw(fam.gw))


def _check_unitary(u, tol=INPUT_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise InvalidStateError(f"local factor must be 2x2, got {u.shape}")
    err = np.max(np.abs(u.conj().T @ u - np.eye(2)))
    if err > tol:
        raise InvalidStateError(f"local factor is not unitary (deviation {err:.3g})")
    return u


def apply_local_unitary(psi, u_a, u_b, u_c) -> np.ndarray:
    """Apply ``U_A (x) U_B (x) U_C`` to a pure state."""
    psi = as_pure_state(psi, tol=INPUT_TOL)
    u_a, u_b, u_c = (_check_unitary(u) for u in (u_a, u_b, u_c))
    out = np.einsum("ai,bj,ck,ijk->abc", u_a, u_b, u_c, psi.reshape(2, 2, 2)).reshape(8)
    return out / np.linalg.norm(out)


def same_up_to_phase(psi, phi, tol: float = 1e-10) -> bool:
    return abs(abs(np.vdot(psi, phi)) - 1) <= tol


# -- random sampling -------------------------------------------------------


def _rng(seed_or_rng) -> np.random.Generator:
    return np.random.default_rng(seed_or_rng)


def random_pure_state(rng=None, size: int | None = None) -> np.ndarray:
    """Haar-distributed three-qubit kets from normalized complex Gaussians."""
    rng = _rng(rng)
    shape = (8,) if size is None else (size, 8)
    v = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def random_unitary(rng=None) -> np.ndarray:
    return unitary_group.rvs(2, random_state=_rng(rng))


def random_acin_params(rng=None) -> AcinParams:
    rng = _rng(rng)
    lam = np.abs(rng.normal(size=5))
    lam /= np.linalg.norm(lam)
    return AcinParams(tuple(lam), float(rng.uniform(0, math.pi)))


def _random_local(psi, rng) -> np.ndarray:
    return apply_local_unitary(psi, random_unitary(rng), random_unitary(rng), random_unitary(rng))


def random_w_class_state(rng=None, local: bool = True) -> np.ndarray:
    """Random ``c|001> + d|010> + f|100>`` with random phases, then random local unitaries."""
    rng = _rng(rng)
    amps = np.abs(rng.normal(size=3)) + 1e-3
    amps /= np.linalg.norm(amps)
    phases = np.exp(1j * rng.uniform(0, 2 * math.pi, size=3))
    psi = ket({"001": amps[0] * phases[0], "010": amps[1] * phases[1], "100": amps[2] * phases[2]})
    return _random_local(psi, rng) if local else psi


def random_product_state(rng=None) -> np.ndarray:
    rng = _rng(rng)
    qubits = [rng.normal(size=2) + 1j * rng.normal(size=2) for _ in range(3)]
    return product_state(*[q / np.linalg.norm(q) for q in qubits])


def random_biseparable_state(rng=None, placement: str = "A") -> np.ndarray:
    """Random single qubit on ``placement`` times a random (entangled) two-qubit state."""
    rng = _rng(rng)
    single = rng.normal(size=2) + 1j * rng.normal(size=2)
    pair = rng.normal(size=4) + 1j * rng.normal(size=4)
    return biseparable_state(single / np.linalg.norm(single), pair / np.linalg.norm(pair), placement)
