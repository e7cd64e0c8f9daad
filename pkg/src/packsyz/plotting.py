"""PNG figures for ``packsyz report``.

Figures are drawn on the Agg canvas directly (no pyplot state), and PNG
metadata is pinned so reruns write identical bytes.
"""

from __future__ import annotations

import math

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .syzygy import render_entry

_PNG_META = {"Software": None}


def _save(fig: Figure, path) -> None:
    FigureCanvasAgg(fig)
    fig.savefig(path, format="png", dpi=120, metadata=_PNG_META)


def betti_figure(table, path) -> None:
    """Grid of the table: cells shaded by log10 of the S_N dimension, labelled by constituents."""
    cols, rows = table.pmax + 1, table.qmax + 1
    fig = Figure(figsize=(2.2 * cols + 1, 1.1 * rows + 1))
    ax = fig.add_subplot(111)
    shade = [[0.0] * cols for _ in range(rows)]
    for (p, q), dec in table.grid.items():
        dim = dec.dimension()
        shade[q][p] = math.log10(dim) if dim else -1.0
    ax.imshow(shade, cmap="Blues", vmin=-1.0, vmax=max(1.0, max(max(r) for r in shade)), aspect="auto")
    for (p, q), dec in table.grid.items():
        label = render_entry(dec).replace(" + ", "\n")
        ax.text(p, q, label, ha="center", va="center", fontsize=7)
    ax.set_xticks(range(cols))
    ax.set_yticks(range(rows))
    ax.set_xlabel("p")
    ax.set_ylabel("q")
    d = ",".join(map(str, table.d))
    b = ",".join(map(str, table.b))
    ax.set_title(f"Betti table, d=({d}) b=({b})")
    fig.tight_layout()
    _save(fig, path)


def scan_figure(report, path) -> None:
    """Constituent count and total multiplicity along a scan, with the bound marked."""
    fig = Figure(figsize=(6, 3.5))
    ax = fig.add_subplot(111)
    xs = list(range(len(report.points)))
    labels = [",".join(map(str, pt.values)) for pt in report.points]
    distinct = [len(pt.unpadded) for pt in report.points]
    total = [sum(pt.unpadded.values()) for pt in report.points]
    ax.plot(xs, distinct, "o-", label="distinct unpadded constituents")
    ax.plot(xs, total, "s--", label="total multiplicity")
    values = [pt.values for pt in report.points]
    if report.stable_from in values:
        ax.axvline(values.index(report.stable_from), color="green", lw=1, label="observed stabilization")
    if report.bound in values:
        ax.axvline(values.index(report.bound), color="red", lw=1, ls=":", label="stable-range bound")
    ax.set_xticks(xs)
    ax.set_xticklabels(labels, rotation=45 if len(report.scanned) > 1 else 0)
    letter = "b" if report.kind == "syzygy" else "N"
    ax.set_xlabel(",".join(f"{letter}{i + 1}" for i in report.scanned))
    ax.set_ylabel("count")
    ax.legend(fontsize=7)
    fig.tight_layout()
    _save(fig, path)


def spectra_figure(reports, path) -> None:
    """Observed eigenvalues (dots) against the allowed set (ticks), one row per (p, a)."""
    fig = Figure(figsize=(6, 0.6 * len(reports) + 1.5))
    ax = fig.add_subplot(111)
    for row, rep in enumerate(reports):
        ax.scatter(rep.allowed, [row] * len(rep.allowed), marker="|", s=200, color="grey")
        if rep.spectrum:
            eig = sorted(set(rep.spectrum))
            ax.scatter(eig, [row] * len(eig), s=20, color="black" if rep.ok else "red")
    ax.set_yticks(range(len(reports)))
    ax.set_yticklabels([f"p={r.p} a={r.a} n={r.n}" for r in reports])
    ax.set_xlabel("eigenvalue of the top Laplacian")
    fig.tight_layout()
    _save(fig, path)
