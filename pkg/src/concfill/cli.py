"""Command-line entry point: ``concfill --command <name> [options]``.

Exit codes: 0 success, 1 property suite failure (``report`` only), 2 input
error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .classify import DEFAULT_TOL, classify_pure, criterion_all_pairs, sweep_example1
from .io import load_state, table_to_csv, table_to_json
from .linalg import InvalidStateError, NumericalError
from .measures import bundle
from .mixtures import cf_eigenstate_closed, cf_eigenstate_direct, cf_upper_bound, p_zero
from .roof import MEASURES, convex_roof_estimate
from .states import (
    GGHZParams,
    GWParams,
    RankTwoFamily,
    make_eigenstate,
    make_gghz,
    make_gw,
    make_rank2_mixture,
)

__all__ = ["COMMANDS", "build_parser", "main"]

COMMANDS = (
    "measures",
    "classify",
    "sweep-example1",
    "sweep-eigenstate",
    "mixture-bound",
    "convex-roof",
    "report",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concfill",
        description="Three-qubit concurrence fill, tangles and GHZ/W classification.",
    )
    parser.add_argument("--command", required=True, choices=COMMANDS)
    parser.add_argument("--state", type=Path, help="JSON file with 8 [re, im] amplitude pairs")
    for name in ("a", "b", "c", "d", "f"):
        parser.add_argument(f"--{name}", type=float, help=f"amplitude {name}")
    parser.add_argument("--p", type=float, help="mixing / superposition weight")
    parser.add_argument("--phi", type=float, default=0.0, help="relative phase (default 0)")
    parser.add_argument("--n-points", type=int, default=100, help="sweep length (>= 2)")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="classification threshold")
    parser.add_argument("--out", type=Path, help="write the table here instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--case", type=int, choices=(1, 2), default=1, help="sweep-example1 benchmark family")
    parser.add_argument("--measure", choices=sorted(MEASURES), default="concurrence_fill")
    parser.add_argument("--budget", type=int, default=2000, help="convex-roof random samples")
    parser.add_argument("--refine-steps", type=int, default=200)
    parser.add_argument("--samples", type=int, default=1000, help="property-suite sample count")
    parser.add_argument(
        "--figure", type=Path, help="also render a figure (sweeps and report) to this image file"
    )
    return parser


# -- inputs ----------------------------------------------------------------


def _family(args, require_p: bool = True) -> RankTwoFamily:
    """Family from inline flags; unspecified amplitudes default to the symmetric values."""
    g = GGHZParams.symmetric()
    if args.a is not None or args.b is not None:
        if args.a is None:
            g = GGHZParams.from_b(args.b)
        elif args.b is None:
            g = GGHZParams(args.a, math.sqrt(max(1 - args.a**2, 0.0)))
        else:
            g = GGHZParams(args.a, args.b)
    w = GWParams.symmetric()
    if any(getattr(args, k) is not None for k in "cdf"):
        if any(getattr(args, k) is None for k in "cdf"):
            raise InvalidStateError("give all of --c, --d and --f")
        w = GWParams(args.c, args.d, args.f)
    if args.p is None and require_p:
        raise InvalidStateError("--p is required for this command")
    return RankTwoFamily(g, w, 0.0 if args.p is None else args.p, args.phi)


def _pure_state(args) -> np.ndarray:
    if args.state is not None:
        return load_state(args.state)
    has_ab = args.a is not None or args.b is not None
    has_cdf = any(getattr(args, k) is not None for k in "cdf")
    if args.p is not None:
        return make_eigenstate(_family(args))
    if has_ab and not has_cdf:
        return make_gghz(_family(args, require_p=False).gghz)
    if has_cdf and not has_ab:
        return make_gw(_family(args, require_p=False).gw)
    raise InvalidStateError("give --state, or inline --a/--b, --c/--d/--f, or a family with --p")


def _check_points(n):
    if n < 2:
        raise InvalidStateError(f"--n-points must be at least 2, got {n}")


# -- commands --------------------------------------------------------------


def _cmd_measures(args):
    b = bundle(_pure_state(args))
    rows = [(k, v) for k, v in b.as_dict().items()]
    rows += [(f"side_{k}", s) for k, s in zip(("a_bc", "b_ac", "c_ab"), b.sides)]
    rows.append(("q", b.q))
    return ("quantity", "value"), rows, None


def _cmd_classify(args):
    psi = _pure_state(args)
    label = classify_pure(psi, args.tol)
    rows = [
        (str(label), r.pair, r.lhs, r.k, r.rhs, str(r.violated).lower())
        for r in criterion_all_pairs(psi).values()
    ]
    return ("label", "pair", "lhs", "k", "rhs", "violated"), rows, None


def _cmd_sweep_example1(args):
    _check_points(args.n_points)
    data = sweep_example1(args.case, args.n_points)

    def figure(path):
        from .plotting import plot_example1

        plot_example1(data, args.case, path)

    return ("d", "lhs", "rhs"), [tuple(r) for r in data], figure


def _cmd_sweep_eigenstate(args):
    _check_points(args.n_points)
    fam = _family(args, require_p=False)
    rows = []
    for p in np.linspace(0.0, 1.0, args.n_points):
        f = fam.at(p=float(p))
        tangle = bundle(make_eigenstate(f)).tangle
        rows.append((float(p), cf_eigenstate_closed(f).c_fill, cf_eigenstate_direct(f), tangle))

    def figure(path):
        from .plotting import plot_eigenstate

        plot_eigenstate(np.array(rows), path)

    return ("p", "cf_closed", "cf_direct", "tangle"), rows, figure


def _cmd_mixture_bound(args):
    _check_points(args.n_points)
    fam = _family(args, require_p=False)
    p0 = p_zero(fam.gghz, fam.gw)
    rows = []
    for p in np.linspace(0.0, p0, args.n_points):
        p = float(p)
        est = convex_roof_estimate(
            make_rank2_mixture(fam.at(p=p)),
            "concurrence_fill",
            budget=args.budget,
            seed=args.seed,
            refine_steps=args.refine_steps,
        )
        rows.append(
            (
                p,
                cf_upper_bound(fam.gghz, fam.gw, p, "printed"),
                cf_upper_bound(fam.gghz, fam.gw, p, "p0"),
                est.value,
            )
        )

    def figure(path):
        from .plotting import plot_mixture_bound

        plot_mixture_bound(np.array(rows), path)

    return ("p", "cf_upper_printed", "cf_upper_variant", "cf_roof_estimate"), rows, figure


def _cmd_convex_roof(args):
    fam = _family(args)
    est = convex_roof_estimate(
        make_rank2_mixture(fam),
        args.measure,
        budget=args.budget,
        seed=args.seed,
        refine_steps=args.refine_steps,
    )
    return ("measure", "p", "value", "size"), [(args.measure, fam.p, est.value, est.size)], None


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_bytes(text.encode())  # bytes keep LF line endings on every platform


def _render(header, rows, fmt) -> str:
    return table_to_json(header, rows) if fmt == "json" else table_to_csv(header, rows)


def _cmd_report(args) -> int:
    from .oracle import (
        discrepancy_report,
        discrepancy_summary,
        reports_summary,
        reports_to_csv,
        run_property_suites,
    )

    suites = run_property_suites(args.seed, args.samples)
    rows = discrepancy_report(args.seed)
    fields = ("name", "reading", "value", "reference", "max_abs_diff", "n", "note")
    if args.out is None:
        print(reports_summary(suites))
        print()
        print(discrepancy_summary(rows))
    else:
        suite_fields = ("name", "closed", "oracle", "difference", "tolerance", "n", "verdict", "detail")
        if args.format == "json":
            pack = lambda items, keys: [[getattr(r, k) for k in keys] for r in items]
            _emit(table_to_json(suite_fields, pack(suites, suite_fields)), args.out)
            _emit(table_to_json(fields, pack(rows, fields)), _sibling(args.out))
        else:
            _emit(reports_to_csv(suites), args.out)
            _emit(reports_to_csv(rows, fields), _sibling(args.out))
        print(reports_summary(suites))
    if args.figure is not None:
        from .plotting import plot_suite_report

        plot_suite_report(suites, args.figure)
    return 0 if all(r.passed for r in suites) else 1


def _sibling(path: Path) -> Path:
    return path.with_name(f"{path.stem}_discrepancies{path.suffix}")


_HANDLERS = {
    "measures": _cmd_measures,
    "classify": _cmd_classify,
    "sweep-example1": _cmd_sweep_example1,
    "sweep-eigenstate": _cmd_sweep_eigenstate,
    "mixture-bound": _cmd_mixture_bound,
    "convex-roof": _cmd_convex_roof,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "report":
            if args.samples < 100:
                raise InvalidStateError("--samples must be at least 100")
            return _cmd_report(args)
        if args.figure is not None and args.command in ("measures", "classify", "convex-roof"):
            raise InvalidStateError("--figure applies to the sweep and report commands only")
        header, rows, figure = _HANDLERS[args.command](args)
        _emit(_render(header, rows, args.format), args.out)
        if args.figure is not None:
            figure(args.figure)
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except (InvalidStateError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
