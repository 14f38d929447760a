"""Figures for run reports (matplotlib, written to files)."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .cluster import Quiver  # noqa: E402


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_quiver(q: Quiver, path: Path, title: str | None = None) -> Path:
    """Vertices (i, j) drawn on the grid with row i downwards; frozen vertices as squares."""
    fig, ax = plt.subplots(figsize=(5, 5))
    pos = {v: (v[1], -v[0]) if isinstance(v, tuple) else (0, 0) for v in q.vertices}
    for (a, b), mult in q.arrows.items():
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="-|>", lw=0.8 + 0.6 * (mult - 1), color="0.3",
                                    shrinkA=9, shrinkB=9, connectionstyle="arc3,rad=0.08"))
    for v, (x, y) in pos.items():
        frozen = v in q.frozen
        ax.plot(x, y, "s" if frozen else "o", ms=13, mfc="w" if frozen else "C0", mec="C0")
        ax.text(x, y, f"{v[0]}{v[1]}" if isinstance(v, tuple) else str(v), ha="center", va="center",
                fontsize=7, color="C0" if frozen else "w")
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return _save(fig, path)


def plot_tp_curve(ts: Sequence[Fraction], psi2: Sequence[Fraction], min_minor: Sequence[Fraction],
                  path: Path, n: int) -> Path:
    fig, (a1, a2) = plt.subplots(1, 2, figsize=(9, 3.5))
    x = [float(t) for t in ts]
    a1.plot(x, [float(v) for v in psi2], "o-", ms=3)
    a1.axhline(0, color="0.6", lw=0.8)
    a1.set_xscale("log", base=2)
    a1.set_xlabel("t")
    a1.set_ylabel(r"$\psi_2(X(t))$")
    a2.plot(x, [float(v) for v in min_minor], "o-", ms=3, color="C1")
    a2.set_xscale("log", base=2)
    a2.set_yscale("log")
    a2.set_xlabel("t")
    a2.set_ylabel("smallest minor of X(t)")
    fig.suptitle(f"n = {n}")
    fig.tight_layout()
    return _save(fig, path)


def plot_omega(omega: Sequence[Sequence[Fraction]], labels: Sequence[str], path: Path) -> Path:
    m = len(omega)
    fig, ax = plt.subplots(figsize=(1 + 0.45 * m, 1 + 0.45 * m))
    vals = [[float(w) for w in row] for row in omega]
    lim = max((abs(v) for row in vals for v in row), default=1) or 1
    im = ax.imshow(vals, cmap="RdBu_r", vmin=-lim, vmax=lim)
    ax.set_xticks(range(m), labels, rotation=90, fontsize=7)
    ax.set_yticks(range(m), labels, fontsize=7)
    fig.colorbar(im, ax=ax, shrink=0.7)
    return _save(fig, path)


def plot_counts(counts: Sequence[int], path: Path, title: str = "") -> Path:
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.plot(range(len(counts)), counts, "o-")
    ax.set_yscale("log")
    ax.set_xlabel("mutation depth")
    ax.set_ylabel("distinct cluster variables")
    if title:
        ax.set_title(title)
    return _save(fig, path)
