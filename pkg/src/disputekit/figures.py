"""Matplotlib rendering of dispute graphs and dispute trees to image files."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx

from .adf import DialecticalFramework
from .core import ArgumentationFramework, Label
from .explain import DisputeNode, DisputeTree, Role, Standing
from .formats import Document, _display_edges
from .structured import CaseFile
from .variants import ValuedFramework

STATUS_COLOR = {
    Label.IN: "#7fc97f",
    Label.OUT: "#f08080",
    Label.UNDEC: "#d9d9d9",
}


def _node_captions(doc: Document) -> dict[str, str]:
    framework = doc.framework
    if isinstance(framework, ValuedFramework):
        return {a: f"{a}\n[{v}]" for a, v in framework.value_of.items()}
    if isinstance(framework, DialecticalFramework):
        return {
            a: f"{a} *" if framework.is_external(a) else a for a in framework.arguments
        }
    if isinstance(framework, (CaseFile, ArgumentationFramework)):
        return {a: a for a in framework.arguments}
    return {a: a for a in framework.base.arguments}


def render_framework_figure(
    doc: Document, standings: dict[str, Standing], path: str, title: str | None = None
) -> str:
    """Draw the dispute graph: node color gives the status, solid arcs are
    attacks, dotted arcs are supports. Returns the written path."""
    attacks, supports = _display_edges(doc)
    captions = _node_captions(doc)
    nodes = sorted(captions)

    graph = nx.DiGraph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from([tuple(p) for p in attacks + supports])
    pos = nx.circular_layout(graph) if len(nodes) > 1 else {n: (0.0, 0.0) for n in nodes}

    fig, ax = plt.subplots(figsize=(8, 6))
    colors = [
        STATUS_COLOR[standings[n].status] if n in standings else "#ffffff" for n in nodes
    ]
    nx.draw_networkx_nodes(
        graph, pos, nodelist=nodes, node_color=colors, node_size=1600,
        edgecolors="#333333", ax=ax,
    )
    nx.draw_networkx_labels(
        graph, pos, labels=captions, font_size=8, ax=ax,
    )
    if attacks:
        nx.draw_networkx_edges(
            graph, pos, edgelist=[tuple(p) for p in attacks], style="solid",
            edge_color="#b03030", arrows=True, arrowsize=16, width=1.4,
            connectionstyle="arc3,rad=0.08", ax=ax, node_size=1600,
        )
    if supports:
        nx.draw_networkx_edges(
            graph, pos, edgelist=[tuple(p) for p in supports], style="dotted",
            edge_color="#3060b0", arrows=True, arrowsize=16, width=1.4,
            connectionstyle="arc3,rad=-0.08", ax=ax, node_size=1600,
        )
    ax.set_title(title or f"{doc.kind.value} dispute graph")
    ax.axis("off")
    handles = [
        plt.Line2D([], [], color="#b03030", label="attack"),
        plt.Line2D([], [], color="#3060b0", linestyle=":", label="support"),
    ]
    ax.legend(handles=handles, loc="lower left", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _tree_positions(root: DisputeNode) -> dict[int, tuple[float, float]]:
    """Leaf-ordered x, depth-ordered y; keyed by node object id."""
    positions: dict[int, tuple[float, float]] = {}
    next_x = [0.0]

    def place(node: DisputeNode, depth: int) -> float:
        if not node.children:
            x = next_x[0]
            next_x[0] += 1.0
        else:
            xs = [place(child, depth + 1) for child in node.children]
            x = sum(xs) / len(xs)
        positions[id(node)] = (x, -float(depth))
        return x

    place(root, 0)
    return positions


def render_dispute_tree_figure(tree: DisputeTree, path: str) -> str:
    """Draw the reinstatement game: proponent nodes in blue, objections in
    orange, unanswered objections outlined in red."""
    positions = _tree_positions(tree.root)
    fig, ax = plt.subplots(figsize=(7, 5))

    def draw(node: DisputeNode) -> None:
        x, y = positions[id(node)]
        for child in node.children:
            cx, cy = positions[id(child)]
            ax.plot([x, cx], [y, cy], color="#888888", zorder=1)
            draw(child)
        facecolor = "#a6cee3" if node.role == Role.PROPONENT else "#fdbf6f"
        edgecolor = "#333333"
        if node.role == Role.OPPONENT and not node.countered:
            edgecolor = "#c00000"
        ax.scatter([x], [y], s=1300, color=facecolor, edgecolors=edgecolor,
                   linewidths=2, zorder=2)
        prefix = "PRO" if node.role == Role.PROPONENT else "CON"
        ax.annotate(f"{prefix}\n{node.argument}", (x, y), ha="center", va="center",
                    fontsize=8, zorder=3)

    draw(tree.root)
    verdict = "proponent wins" if tree.proponent_wins else "proponent loses"
    ax.set_title(f"dispute over {tree.target}: {verdict}")
    depth = max(1, -min(p[1] for p in positions.values()))
    width = max(1.0, max(p[0] for p in positions.values()))
    ax.set_xlim(-0.8, width + 0.8)
    ax.set_ylim(-depth - 0.8, 0.8)
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
