"""Closed forms for the rank-two GHZ/W mixture and its eigenstate superpositions.

The family is ``rho(p) = p |gGHZ><gGHZ| + (1-p) |gW><gW|`` with
``|gGHZ> = a|000> + b|111>``, ``|gW> = c|001> + d|010> + f|100>`` and the
superpositions ``|psi_{p,phi}> = sqrt(p)|gGHZ> - sqrt(1-p) e^{i phi}|gW>``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .linalg import InvalidStateError, NumericalError
from .measures import concurrence_fill_direct
from .states import (
    GGHZParams,
    GWParams,
    RankTwoFamily,
    make_eigenstate,
    make_gw,
    projector,
)

__all__ = [
    "OPTIMAL_PHASES",
    "DecompositionConstants",
    "EigenstateClosedForms",
    "cf_eigenstate_closed",
    "cf_eigenstate_direct",
    "cf_gghz",
    "cf_gw",
    "cf_upper_bound",
    "decomposition_constants",
    "optimal_decomposition",
    "p_min_and_lower_bound",
    "p_zero",
    "rho_hat",
    "stationary_points",
    "tangle_eigenstate_closed",
]

#: phases of the zero-tangle decomposition elements
OPTIMAL_PHASES = (0.0, 2 * math.pi / 3, 4 * math.pi / 3)


@dataclass(frozen=True)
class EigenstateClosedForms:
    x: complex
    y: complex
    z: complex
    tangle: float
    c_fill: float


@dataclass(frozen=True)
class DecompositionConstants:
    p_min: float
    p_zero: float
    cf_lower: float
    cf_gghz: float
    cf_gw: float


def tangle_eigenstate_closed(fam: RankTwoFamily) -> float:
    """``4 |p^2 a^2 b^2 - 4 sqrt(p (1-p)^3) e^{3 i phi} b c d f|``."""
    a, b = fam.gghz.a, fam.gghz.b
    c, d, f = fam.gw.c, fam.gw.d, fam.gw.f
    p, phi = fam.p, fam.phi
    inner = p * p * a * a * b * b - 4 * math.sqrt(p * (1 - p) ** 3) * np.exp(3j * phi) * b * c * d * f
    return 4 * abs(inner)


def cf_eigenstate_closed(
    fam: RankTwoFamily, *, e: float | None = None, printed_phases: bool = False
) -> EigenstateClosedForms:
    """Concurrence fill of ``|psi_{p,phi}>`` as ``(256/3 |x y z (x+y+z)|)^(1/4)``.

    ``x``, ``y`` and ``z`` are half the triangle factors ``Q - C^2_{i|jk}``
    for qubits A, B, C::

        x = p^2 a^2 b^2 + 2 p (1-p) f^2 b^2 + 2 (1-p)^2 c^2 d^2
        y = p^2 a^2 b^2 + 2 p (1-p) b^2 d^2 + 2 (1-p)^2 e^2 f^2
        z = p^2 a^2 b^2 + 2 p (1-p) b^2 c^2 + 2 (1-p)^2 d^2 f^2

    with ``e = c`` unless overridden.  The concurrence fill of these states
    does not depend on ``phi``.  ``printed_phases=True`` multiplies the
    middle and last terms by ``e^{2 i phi}`` and ``e^{4 i phi}``; that
    variant only agrees with the direct value when ``e^{2 i phi} = 1``.
    """
    a, b = fam.gghz.a, fam.gghz.b
    c, d, f = fam.gw.c, fam.gw.d, fam.gw.f
    e = c if e is None else e
    p = fam.p
    ph2 = np.exp(2j * fam.phi) if printed_phases else 1.0
    ph4 = np.exp(4j * fam.phi) if printed_phases else 1.0
    g = p * p * a * a * b * b
    x = complex(g + 2 * p * (1 - p) * ph2 * f * f * b * b + 2 * ph4 * (1 - p) ** 2 * c * c * d * d)
    y = complex(g + 2 * p * (1 - p) * ph2 * b * b * d * d + 2 * ph4 * (1 - p) ** 2 * e * e * f * f)
    z = complex(g + 2 * p * (1 - p) * ph2 * b * b * c * c + 2 * ph4 * (1 - p) ** 2 * d * d * f * f)
    cf = (256 / 3 * abs(x * y * z * (x + y + z))) ** 0.25
    return EigenstateClosedForms(x, y, z, tangle_eigenstate_closed(fam), cf)


def cf_gghz(g: GGHZParams) -> float:
    return 4 * g.a**2 * g.b**2


def cf_gw(w: GWParams) -> float:
    """``8 |c d f| ((c^2 d^2 + d^2 f^2 + c^2 f^2) / 3)^(1/4)``."""
    c, d, f = w.c, w.d, w.f
    return 8 * abs(c * d * f) * ((c * c * d * d + d * d * f * f + c * c * f * f) / 3) ** 0.25


def stationary_points(g: GGHZParams, w: GWParams) -> tuple[float, float, float]:
    """Stationary values of ``p`` for ``x``, ``y`` and ``z`` at ``phi = 0``.

    A component whose denominator vanishes is returned as ``nan``.
    """
    a2b2 = g.a**2 * g.b**2
    b2 = g.b**2
    c2, d2, f2 = w.c**2, w.d**2, w.f**2
    out = []
    for pair, cross in ((c2 * d2, f2 * b2), (c2 * f2, b2 * d2), (d2 * f2, b2 * c2)):
        den = a2b2 + 2 * (pair - cross)
        out.append((2 * pair - cross) / den if abs(den) > 1e-15 else math.nan)
    return tuple(out)


def p_min_and_lower_bound(g: GGHZParams, w: GWParams | None = None) -> tuple[float, float]:
    """``p_min = 1/(1+3b^2)`` and ``C_F = 4b^2/(1+3b^2)`` for the symmetric W part.

    The stationary point is a minimum over ``p`` only while ``b^2 < 2/3``;
    beyond that it is a maximum and a ``RuntimeWarning`` is issued.
    """
    b = g.b
    if not 0 < b < 1:
        raise InvalidStateError("the bound needs 0 < b < 1")
    if w is not None and max(abs(x - 1 / math.sqrt(3)) for x in (w.c, w.d, w.f)) > 1e-10:
        raise InvalidStateError("the bound assumes c = d = f = 1/sqrt(3)")
    b2 = b * b
    p_min = 1 / (1 + 3 * b2)
    cf_lower = 4 * b2 / (1 + 3 * b2)
    check = cf_eigenstate_closed(RankTwoFamily(g, GWParams.symmetric(), p_min, 0.0)).c_fill
    if abs(check - cf_lower) > 1e-9:
        raise NumericalError(f"closed form at p_min gives {check!r}, expected {cf_lower!r}")
    if b2 > 2 / 3:
        warnings.warn(
            f"b^2 = {b2:.6g} > 2/3: p = 1/(1+3b^2) maximizes the concurrence fill over p",
            RuntimeWarning,
            stacklevel=2,
        )
    return p_min, cf_lower


def p_zero(g: GGHZParams, w: GWParams) -> float:
    """Largest ``p`` for which ``rho(p)`` has vanishing three-tangle."""
    num = (16 * w.c**2 * w.d**2 * w.f**2) ** (1 / 3)
    den = (g.a**4 * g.b**2) ** (1 / 3) + num
    if den == 0:
        raise InvalidStateError("degenerate family: both cube-root terms vanish")
    return num / den


def decomposition_constants(g: GGHZParams, w: GWParams) -> DecompositionConstants:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        p_min, lower = p_min_and_lower_bound(g) if 0 < g.b < 1 else (math.nan, math.nan)
    return DecompositionConstants(p_min, p_zero(g, w), lower, cf_gghz(g), cf_gw(w))


def optimal_decomposition(g: GGHZParams, w: GWParams, p: float) -> list[tuple[float, np.ndarray]]:
    """Four-element ensemble of zero-tangle states reproducing ``rho(p)`` for ``p <= p0``.

    Weight ``p/(3 p0)`` on each ``|psi_{p0, 2k pi/3}>`` and ``(p0 - p)/p0``
    on ``|gW>``.
    """
    p0 = p_zero(g, w)
    if not 0 <= p <= p0:
        raise InvalidStateError(f"p={p} outside the zero-tangle range [0, {p0:.12g}]")
    out = [(p / p0 / 3, make_eigenstate(RankTwoFamily(g, w, p0, phi))) for phi in OPTIMAL_PHASES]
    out.append(((p0 - p) / p0, make_gw(w)))
    return out


def rho_hat(g: GGHZParams, w: GWParams, p: float) -> np.ndarray:
    """Equal-weight mixture of ``|psi_{p, 2k pi/3}>`` for k = 0, 1, 2."""
    return sum(projector(make_eigenstate(RankTwoFamily(g, w, p, phi))) for phi in OPTIMAL_PHASES) / 3


def _phase_average(g: GGHZParams, w: GWParams, p: float) -> float:
    return sum(cf_eigenstate_closed(RankTwoFamily(g, w, p, phi)).c_fill for phi in OPTIMAL_PHASES) / 3


def cf_upper_bound(g: GGHZParams, w: GWParams, p: float, variant: str = "printed") -> float:
    """Upper bound on the convex-roof concurrence fill of ``rho(p)``, ``0 <= p <= p0``.

    ``(p/p0) B + ((p0 - p)/p0) C_F(|gW>)`` where ``B`` averages the
    eigenstate concurrence fill over the three optimal phases.  The
    ``"printed"`` variant evaluates ``B`` at ``p``; the ``"p0"`` variant
    evaluates it at ``p0``, which is the value the optimal decomposition
    itself certifies.
    """
    p0 = p_zero(g, w)
    if not -1e-15 <= p <= p0 + 1e-15:
        raise InvalidStateError(f"p={p} outside the zero-tangle range [0, {p0:.12g}]")
    if variant == "printed":
        avg = _phase_average(g, w, p)
    elif variant == "p0":
        avg = _phase_average(g, w, p0)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return p / p0 * avg + (p0 - p) / p0 * cf_gw(w)


def cf_eigenstate_direct(fam: RankTwoFamily) -> float:
    """Concurrence fill of the constructed eigenstate, for comparison with the closed form."""
    return concurrence_fill_direct(make_eigenstate(fam))
