"""DOT export and matplotlib Hasse diagrams of algebra trees."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from .core import CbckAlgebra, RootedTree


def to_dot(tree: RootedTree | CbckAlgebra, name: str = "A", highlight: Sequence[int] = ()) -> str:
    """Edges run parent -> child; node ids are the parent-list indices and
    labels are heights."""
    if isinstance(tree, CbckAlgebra):
        tree = tree.tree
    marked = set(highlight)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for v in range(len(tree)):
        style = ", style=filled, fillcolor=gray80" if v in marked else ""
        lines.append(f'  n{v} [label="{tree.depth[v]}"{style}];')
    for v in range(1, len(tree)):
        lines.append(f"  n{tree.parent[v]} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(path: str | Path, tree: RootedTree | CbckAlgebra, name: str = "A",
              highlight: Sequence[int] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_dot(tree, name, highlight))
    return path


def layout(tree: RootedTree) -> list[tuple[float, float]]:
    """Leaves evenly spaced left to right, inner nodes centred over their
    children, y equal to height."""
    xs = [0.0] * len(tree)
    nxt = 0
    for v in tree.preorder:
        if not tree.children[v]:
            xs[v] = float(nxt)
            nxt += 1
    for v in reversed(tree.preorder):
        kids = tree.children[v]
        if kids:
            xs[v] = sum(xs[c] for c in kids) / len(kids)
    return [(xs[v], float(tree.depth[v])) for v in range(len(tree))]


def draw_tree(ax, tree: RootedTree | CbckAlgebra, title: Optional[str] = None,
              highlight: Sequence[int] = (), show_ids: bool = True) -> None:
    if isinstance(tree, CbckAlgebra):
        tree = tree.tree
    pos = layout(tree)
    for v in range(1, len(tree)):
        (x0, y0), (x1, y1) = pos[tree.parent[v]], pos[v]
        ax.plot([x0, x1], [y0, y1], color="0.3", lw=1.2, zorder=1)
    marked = set(highlight)
    for v, (x, y) in enumerate(pos):
        face = "black" if v in marked else "white"
        ax.scatter([x], [y], s=70, facecolor=face, edgecolor="black", zorder=2)
        if show_ids:
            ax.annotate(str(v), (x, y), xytext=(5, -3), textcoords="offset points", fontsize=7)
    ax.set_xticks([])
    ax.set_ylabel("height")
    ax.set_yticks(range(max(tree.depth) + 1))
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    xs = [p[0] for p in pos]
    ax.set_xlim(min(xs) - 0.8, max(xs) + 0.8)
    ax.set_ylim(-0.5, max(tree.depth) + 0.5)
    if title:
        ax.set_title(title, fontsize=9)


def plot_tree(path: str | Path, tree: RootedTree | CbckAlgebra, title: Optional[str] = None,
              highlight: Sequence[int] = ()) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    t = tree.tree if isinstance(tree, CbckAlgebra) else tree
    leaves = sum(1 for v in range(len(t)) if not t.children[v])
    fig, ax = plt.subplots(figsize=(1.2 + 0.6 * leaves, 1.2 + 0.5 * max(t.depth)))
    draw_tree(ax, t, title, highlight)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_panel(path: str | Path, trees: Sequence[RootedTree | CbckAlgebra],
               titles: Sequence[str], ncols: int = 4) -> Path:
    """Small multiples, one tree per axis."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = max(1, len(trees))
    ncols = min(ncols, n)
    nrows = (n + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(2.6 * ncols, 2.4 * nrows), squeeze=False)
    for ax in axes.flat[len(trees):]:
        ax.axis("off")
    for ax, tree, title in zip(axes.flat, trees, titles):
        draw_tree(ax, tree, title, show_ids=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
