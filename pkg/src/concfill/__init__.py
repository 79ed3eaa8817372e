"""Three-qubit concurrence fill, tangles and GHZ/W classification."""

from .classify import (
    ClassLabel,
    classify,
    classify_pure,
    sweep_example1,
    w_class_criterion,
)
from .linalg import InvalidStateError, NumericalError, partial_trace
from .measures import (
    MeasureBundle,
    bundle,
    concurrence_fill_direct,
    concurrence_fill_reformulated,
    concurrence_mixed,
    partial_tangles,
    tangle_pure,
)
from .mixtures import (
    cf_eigenstate_closed,
    cf_upper_bound,
    p_min_and_lower_bound,
    p_zero,
)
from .roof import convex_roof_estimate
from .states import (
    AcinParams,
    GGHZParams,
    GWParams,
    RankTwoFamily,
    ghz_state,
    make_eigenstate,
    make_rank2_mixture,
    w_state,
)

__version__ = "0.1.0"

__all__ = [
    "AcinParams",
    "ClassLabel",
    "GGHZParams",
    "GWParams",
    "InvalidStateError",
    "MeasureBundle",
    "NumericalError",
    "RankTwoFamily",
    "bundle",
    "cf_eigenstate_closed",
    "cf_upper_bound",
    "classify",
    "classify_pure",
    "concurrence_fill_direct",
    "concurrence_fill_reformulated",
    "concurrence_mixed",
    "convex_roof_estimate",
    "ghz_state",
    "make_eigenstate",
    "make_rank2_mixture",
    "p_min_and_lower_bound",
    "p_zero",
    "partial_tangles",
    "partial_trace",
    "sweep_example1",
    "tangle_pure",
    "w_class_criterion",
    "w_state",
]
