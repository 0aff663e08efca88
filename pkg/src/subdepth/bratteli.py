"""Bratteli diagram of an inclusion matrix and depth from graph distances.

Bottom vertices W_1..W_r are the simples of the subalgebra, top vertices
V_1..V_s the simples of the overalgebra, with m_ij edges between W_i and V_j.
Module distance d(W_i, W_j) is half the edge distance in this graph.  Odd
depth is 2D+1 for D the largest finite distance between bottom vertices; even
depth is 2 + twice the largest distance from a bottom vertex to the neighbour
set of a single top vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import OracleMismatch
from .intmatrix import DepthReport, IrredundantMatrix, depth as matrix_depth


@dataclass(frozen=True)
class BiGraph:
    matrix: IrredundantMatrix
    edges: tuple[tuple[int, int, int], ...]  # (bottom i, top j, multiplicity)
    bottom_adj: tuple[tuple[int, ...], ...] = field(repr=False)
    top_adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def r(self) -> int:
        return self.matrix.rows

    @property
    def s(self) -> int:
        return self.matrix.cols

    def top_neighbours(self, u: int) -> frozenset[int]:
        """The constituent set of V_u restricted to the subalgebra."""
        return frozenset(self.top_adj[u])


def build_graph(m: IrredundantMatrix) -> BiGraph:
    edges = tuple(
        (i, j, m.entries[i][j]) for i in range(m.rows) for j in range(m.cols) if m.entries[i][j]
    )
    bottom = tuple(tuple(j for j in range(m.cols) if m.entries[i][j]) for i in range(m.rows))
    top = tuple(tuple(i for i in range(m.rows) if m.entries[i][j]) for j in range(m.cols))
    return BiGraph(m, edges, bottom, top)


def _bfs_from_bottom(g: BiGraph, start: int) -> tuple[list[int | None], list[int | None]]:
    """Edge distances from W_start to every bottom and every top vertex."""
    dist_b: list[int | None] = [None] * g.r
    dist_t: list[int | None] = [None] * g.s
    dist_b[start] = 0
    queue = deque([(0, start)])  # side 0 = bottom, 1 = top
    while queue:
        side, v = queue.popleft()
        if side == 0:
            d = dist_b[v]
            for u in g.bottom_adj[v]:
                if dist_t[u] is None:
                    dist_t[u] = d + 1
                    queue.append((1, u))
        else:
            d = dist_t[v]
            for w in g.top_adj[v]:
                if dist_b[w] is None:
                    dist_b[w] = d + 1
                    queue.append((0, w))
    return dist_b, dist_t


@dataclass(frozen=True)
class DistanceTable:
    """Module distances; None stands for unreachable (the -infinity case)."""

    bottom: tuple[tuple[int | None, ...], ...]
    to_top_sets: tuple[tuple[int | None, ...], ...]  # d(W_i, constituents of V_u)

    def __getitem__(self, ij: tuple[int, int]) -> int | None:
        i, j = ij
        return self.bottom[i][j]

    def max_finite(self) -> int:
        return max(d for row in self.bottom for d in row if d is not None)

    def m_value(self, u: int) -> int:
        """Largest finite distance from a bottom vertex to the set V_u restricts to."""
        return max(row[u] for row in self.to_top_sets if row[u] is not None)


def distances(g: BiGraph) -> DistanceTable:
    bottom = []
    to_top = []
    for i in range(g.r):
        db, dt = _bfs_from_bottom(g, i)
        bottom.append(tuple(None if d is None else d // 2 for d in db))
        # a bottom->top path has odd length 2k+1, where k is the distance to
        # the nearest constituent of that top vertex
        to_top.append(tuple(None if d is None else (d - 1) // 2 for d in dt))
    return DistanceTable(tuple(bottom), tuple(to_top))


def odd_depth(g: BiGraph, table: DistanceTable | None = None) -> int:
    """2D+1 for D the largest finite bottom distance.

    One bottom vertex gives 1; otherwise the result is at least 3, since odd
    depth inequalities start at 3.
    """
    table = table or distances(g)
    if g.r == 1:
        return 1
    return 2 * max(table.max_finite(), 1) + 1


def is_normal_pattern(g: BiGraph) -> bool:
    """True iff every top vertex restricts onto an entire equivalence class."""
    classes = equiv_classes(g)
    bottom_sets = {frozenset(c) for c in classes.bottom}
    return all(g.top_neighbours(u) in bottom_sets for u in range(g.s))


def even_depth(g: BiGraph, table: DistanceTable | None = None) -> int:
    if is_normal_pattern(g):
        return 2
    table = table or distances(g)
    worst = max(table.m_value(u) for u in range(g.s))
    return 2 * worst + 2


def graph_depth(g: BiGraph) -> DepthReport:
    """Depth from the two graph characterizations, checked against matrix powers."""
    table = distances(g)
    found = max(2, min(odd_depth(g, table), even_depth(g, table)))
    oracle = matrix_depth(g.matrix)
    if found != oracle.depth:
        raise OracleMismatch(f"graph depth {found} != matrix depth {oracle.depth}\n{g.matrix}")
    return oracle


@dataclass(frozen=True)
class EquivClasses:
    bottom: tuple[tuple[int, ...], ...]
    top: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.bottom)


def equiv_classes(g: BiGraph) -> EquivClasses:
    """Connected components, projected to each side, ordered by least bottom index."""
    seen_b = [False] * g.r
    bottom_classes = []
    top_classes = []
    for start in range(g.r):
        if seen_b[start]:
            continue
        db, dt = _bfs_from_bottom(g, start)
        b = tuple(i for i, d in enumerate(db) if d is not None)
        t = tuple(j for j, d in enumerate(dt) if d is not None)
        for i in b:
            seen_b[i] = True
        bottom_classes.append(b)
        top_classes.append(t)
    return EquivClasses(tuple(bottom_classes), tuple(top_classes))


def export_dot(
    g: BiGraph,
    name: str = "bratteli",
    bottom_labels: Sequence[str] | None = None,
    top_labels: Sequence[str] | None = None,
) -> str:
    """GraphViz text for the diagram: subalgebra simples filled on the bottom
    rank, overalgebra simples hollow on the top rank."""
    out = [f'graph "{name}" {{', "  rankdir=BT;", '  node [shape=circle, label="", width=0.25];']
    for i in range(g.r):
        attrs = "style=filled, fillcolor=black"
        if bottom_labels:
            attrs += f', xlabel="{bottom_labels[i]}"'
        out.append(f"  b{i + 1} [{attrs}];")
    for j in range(g.s):
        attrs = "style=solid"
        if top_labels:
            attrs += f', xlabel="{top_labels[j]}"'
        out.append(f"  t{j + 1} [{attrs}];")
    out.append("  { rank=same; " + " ".join(f"b{i + 1};" for i in range(g.r)) + " }")
    out.append("  { rank=same; " + " ".join(f"t{j + 1};" for j in range(g.s)) + " }")
    for i, j, mult in g.edges:
        label = f' [label="{mult}"]' if mult > 1 else ""
        out.append(f"  b{i + 1} -- t{j + 1}{label};")
    out.append("}")
    return "\n".join(out) + "\n"
