"""Figures for bench output."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .bench import BenchRow, count_bound


def plot_ops(rows: list[BenchRow], path: str, title: str = "primitive operations per odd M"):
    """Scatter of ops against M with both bounds, written to ``path``."""
    if not rows:
        raise ValueError("nothing to plot")
    Ms = [r.M for r in rows]
    fig, ax = plt.subplots(figsize=(8, 5))
    prime = [r for r in rows if r.verdict == "prime"]
    comp = [r for r in rows if r.verdict == "composite"]
    ax.scatter([r.M for r in comp], [r.primitive_ops for r in comp], s=2, alpha=0.5, label="composite")
    ax.scatter([r.M for r in prime], [r.primitive_ops for r in prime], s=2, alpha=0.5, label="prime")
    ax.plot(Ms, [count_bound(r.N) for r in rows], lw=1, color="k", label="2N²(2^⌊N/2⌋+2^⌊(N-1)/2⌋-2)+N")
    ax.plot(Ms, [r.paper_bound for r in rows], lw=1, ls="--", color="r", label="4(√M-1)(log₂M)²+log₂M")
    ax.set_xlabel("M")
    ax.set_ylabel("operations")
    if max(r.primitive_ops for r in rows) > 0:
        ax.set_yscale("log")
    ax.set_title(title)
    ax.legend(loc="upper left", markerscale=4)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
    return path
