"""Figures for the sweep tables, rendered off-screen to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["plot_eigenstate", "plot_example1", "plot_mixture_bound", "plot_suite_report"]

# fixed metadata keeps PNG/PDF output byte-identical between runs
_METADATA = {"png": {"Software": None}, "pdf": {"CreationDate": None, "Producer": None}, "svg": {"Date": None}}


def _save(fig, path):
    ext = str(path).rsplit(".", 1)[-1].lower()
    fig.tight_layout()
    with matplotlib.rc_context({"svg.hashsalt": "concfill"}):  # stable element ids in SVG
        fig.savefig(path, dpi=150, metadata=_METADATA.get(ext))
    plt.close(fig)


def plot_example1(data: np.ndarray, case: int, path) -> None:
    """``lhs = C_F^4`` and ``rhs = k tau_BC^2`` against ``d``."""
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(data[:, 0], data[:, 1], label=r"$C_F^4$")
    ax.plot(data[:, 0], data[:, 2], "--", label=r"$k\,\tau_{BC}^2$")
    ax.set_xlabel("d")
    ax.set_title(f"case {case}")
    ax.legend()
    _save(fig, path)


def plot_eigenstate(data: np.ndarray, path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(data[:, 0], data[:, 1], label=r"$C_F$ closed form")
    ax.plot(data[:, 0], data[:, 2], ":", label=r"$C_F$ direct")
    ax.plot(data[:, 0], data[:, 3], label=r"$\tau$")
    ax.set_xlabel("p")
    ax.legend()
    _save(fig, path)


def plot_mixture_bound(data: np.ndarray, path) -> None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(data[:, 0], data[:, 1], label="upper bound (B at p)")
    ax.plot(data[:, 0], data[:, 2], "--", label=r"upper bound (B at $p_0$)")
    ax.plot(data[:, 0], data[:, 3], ".", label="numerical convex roof")
    ax.set_xlabel("p")
    ax.set_ylabel(r"$C_F$")
    ax.legend()
    _save(fig, path)


def plot_suite_report(reports, path) -> None:
    """Worst deviation of every property suite next to its tolerance (log scale)."""
    names = [r.name for r in reports]
    floor = 1e-18
    diffs = [max(r.difference, floor) for r in reports]
    tols = [max(r.tolerance, floor) for r in reports]
    y = np.arange(len(names))
    fig, ax = plt.subplots(figsize=(6, 0.3 * len(names) + 1.2))
    colors = ["tab:blue" if r.passed else "tab:red" for r in reports]
    ax.barh(y, diffs, color=colors, left=floor)
    ax.scatter(tols, y, marker="|", s=150, color="k", label="tolerance")
    ax.set_xscale("log")
    ax.set_yticks(y, names, fontsize=7)
    ax.set_xlabel("worst deviation")
    ax.legend(fontsize=7)
    _save(fig, path)
