"""Dense linear algebra on one-, two- and three-qubit operators.

Qubits are labelled A, B, C and ordered A (x) B (x) C, so the computational
basis index is the bit string ``b_A b_B b_C`` with qubit A most significant.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Union

import numpy as np

__all__ = [
    "HERMITIAN_TOL",
    "INPUT_TOL",
    "SIGMA_Y",
    "SIGMA_YY",
    "InvalidStateError",
    "NumericalError",
    "hermitian_eigenvalues",
    "partial_trace",
    "qubit_indices",
    "spin_flip",
    "validate_density_matrix",
    "validate_matrix",
]

#: tolerance used when constructing or validating density matrices
HERMITIAN_TOL = 1e-10
#: tolerance used when checking operation inputs
INPUT_TOL = 1e-8

SIGMA_Y = np.array([[0, -1j], [1j, 0]])
#: sigma_y (x) sigma_y is real in the computational basis
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y).real

_LABELS = "ABC"

QubitSpec = Union[str, int, Iterable[str | int]]


class InvalidStateError(ValueError):
    """An input state or matrix violates one of its invariants."""


class NumericalError(ArithmeticError):
    """A computed quantity left its admissible range beyond float noise."""


def qubit_indices(spec: QubitSpec) -> tuple[int, ...]:
    """Normalize a qubit selection to sorted integer indices.

    ``spec`` may be a label string such as ``"A"`` or ``"BC"``, a single
    index, or an iterable mixing labels and indices.
    """
    if isinstance(spec, (int, np.integer)):
        items: list = [spec]
    elif isinstance(spec, str):
        items = list(spec.upper())
    else:
        items = list(spec)
    out = set()
    for item in items:
        if isinstance(item, str):
            if item.upper() not in _LABELS:
                raise ValueError(f"unknown qubit label {item!r}")
            out.add(_LABELS.index(item.upper()))
        else:
            if not 0 <= int(item) < 3:
                raise ValueError(f"qubit index {item!r} out of range")
            out.add(int(item))
    return tuple(sorted(out))


def validate_matrix(m, dims=(2, 4, 8)) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidStateError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in dims:
        raise InvalidStateError(f"dimension {m.shape[0]} not in {tuple(dims)}")
    return m


def validate_density_matrix(rho, tol: float = HERMITIAN_TOL, dims=(2, 4, 8)) -> np.ndarray:
    """Return ``rho`` as a complex array after checking the density-matrix invariants.

    Raises
    ------
    InvalidStateError
        If ``rho`` is not Hermitian, not unit trace or has an eigenvalue
        below ``-tol``.
    """
    rho = validate_matrix(rho, dims)
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > tol:
        raise InvalidStateError(f"not Hermitian: max |M - M^dagger| = {herm:.3g}")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise InvalidStateError(f"trace is {tr.real:.12g}, expected 1")
    low = np.linalg.eigvalsh(rho)[0]
    if low < -tol:
        raise InvalidStateError(f"not positive semidefinite: eigenvalue {low:.3g}")
    return rho


def partial_trace(rho, keep: QubitSpec) -> np.ndarray:
    """Reduced density matrix of a three-qubit operator on the qubits in ``keep``.

    Parameters
    ----------
    rho : array_like, shape (8, 8)
        Three-qubit density matrix.
    keep : str, int or iterable
        Non-empty proper subset of ``{A, B, C}`` to retain, e.g. ``"A"`` or
        ``"BC"``.

    Returns
    -------
    ndarray
        Reduced matrix of dimension ``2 ** len(keep)``; the kept qubits stay
        in A, B, C order.
    """
    rho = validate_matrix(rho, dims=(8,))
    kept = qubit_indices(keep)
    if len(kept) not in (1, 2):
        raise ValueError("keep must be a non-empty proper subset of {A, B, C}")
    traced = [q for q in range(3) if q not in kept]
    t = rho.reshape([2] * 6)
    # ket axes 0..2, bra axes 3..5; contract each traced ket axis with its bra
    letters = list("abcdef")
    for q in traced:
        letters[q + 3] = letters[q]
    out = "".join(letters[q] for q in kept) + "".join(letters[q + 3] for q in kept)
    red = np.einsum("".join(letters) + "->" + out, t)
    d = 2 ** len(kept)
    return red.reshape(d, d)


def hermitian_eigenvalues(m, tol: float = INPUT_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order."""
    m = validate_matrix(m)
    herm = np.max(np.abs(m - m.conj().T))
    if herm > tol:
        raise InvalidStateError(f"not Hermitian: max |M - M^dagger| = {herm:.3g}")
    return np.linalg.eigvalsh(m)[::-1]


def spin_flip(rho) -> np.ndarray:
    """Spin-flipped two-qubit operator ``(Y (x) Y) rho* (Y (x) Y)``."""
    rho = validate_matrix(rho, dims=(4,))
    return SIGMA_YY @ rho.conj() @ SIGMA_YY
