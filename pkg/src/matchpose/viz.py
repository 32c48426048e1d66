"""Matplotlib rendering of an analysis: the graph colored by partition
class next to the Hasse diagram of the component order."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import FancyArrowPatch

from .decomposition import FactorDecomposition
from .graph import Graph
from .partition import CanonicalPartition
from .poset import ComponentPoset


def _component_layout(g: Graph, d: FactorDecomposition) -> dict[int, tuple[float, float]]:
    """Each component on its own circle; components on a coarse grid."""
    pos: dict[int, tuple[float, float]] = {}
    k = max(1, len(d.components))
    cols = math.ceil(math.sqrt(k))
    for ci, comp in enumerate(d.components):
        cx = 2.6 * (ci % cols)
        cy = -2.6 * (ci // cols)
        verts = sorted(comp)
        r = 0.4 + 0.09 * len(verts)
        for i, v in enumerate(verts):
            a = 2 * math.pi * i / len(verts)
            pos[v] = (cx + r * math.cos(a), cy + r * math.sin(a))
    return pos


def _hasse_layers(p: ComponentPoset) -> list[int]:
    """Layer of each component: length of the longest chain below it."""
    k = p.k
    layer = [0] * k
    for _ in range(k):
        for a in range(k):
            for b in range(k):
                if a != b and p.leq[a][b]:
                    layer[b] = max(layer[b], layer[a] + 1)
    return layer


def render_figure(
    g: Graph,
    d: FactorDecomposition,
    part: CanonicalPartition,
    p: ComponentPoset,
    path: str,
) -> None:
    """Write a two-panel figure (graph + Hasse diagram) to ``path``."""
    fig, (ax_g, ax_h) = plt.subplots(
        1, 2, figsize=(11, 5.5), gridspec_kw={"width_ratios": [3, 2]}
    )
    cmap = plt.get_cmap("tab20")
    pos = _component_layout(g, d)

    for u, v in sorted(g.edges):
        allowed = (u, v) in d.allowed
        matched = d.matching.mate[u] == v
        xs, ys = zip(pos[u], pos[v])
        ax_g.plot(
            xs,
            ys,
            color="black" if matched else ("tab:blue" if allowed else "0.8"),
            linewidth=2.2 if matched else (1.4 if allowed else 0.8),
            zorder=1,
        )
    for v in range(g.n):
        x, y = pos[v]
        ax_g.scatter(
            [x], [y], s=210, color=cmap(part.class_of[v] % 20), zorder=2,
            edgecolors="black", linewidths=0.6,
        )
        ax_g.annotate(
            str(v), (x, y), ha="center", va="center", fontsize=8, zorder=3
        )
    ax_g.set_title(
        f"{len(d.components)} factor-component(s), {len(part.classes)} class(es)"
    )
    ax_g.set_aspect("equal")
    ax_g.axis("off")

    layer = _hasse_layers(p)
    slots: dict[int, int] = {}
    xs: dict[int, float] = {}
    ys: dict[int, float] = {}
    for ci in range(p.k):
        s = slots.get(layer[ci], 0)
        slots[layer[ci]] = s + 1
        xs[ci] = float(s)
        ys[ci] = float(layer[ci])
    for a, b in p.covers:
        arrow = FancyArrowPatch(
            (xs[a], ys[a]),
            (xs[b], ys[b]),
            arrowstyle="-|>",
            mutation_scale=14,
            color="0.3",
            shrinkA=16,
            shrinkB=16,
        )
        ax_h.add_patch(arrow)
    for ci in range(p.k):
        ax_h.scatter([xs[ci]], [ys[ci]], s=460, color="white", edgecolors="black")
        ax_h.annotate(
            f"H{ci}", (xs[ci], ys[ci]), ha="center", va="center", fontsize=9
        )
    ax_h.set_title("component order (Hasse)")
    ax_h.set_xlim(-0.8, max(xs.values(), default=0.0) + 0.8)
    ax_h.set_ylim(-0.8, max(ys.values(), default=0.0) + 0.8)
    ax_h.axis("off")

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
