"""Partitions, Young-diagram distance and the branching graphs of S_n and A_n.

Inclusion matrices here are built from branching rules alone (add/remove a
box), with no character values, so they give an independent route to the
matrices that ``chartab`` computes from character tables.

For A_n the vertices are [lam, 0] for each pair lam != lam' (labelled by the
lexicographically larger one) and [lam, +], [lam, -] for each self-conjugate
lam.  Edges between level n+1 and level n follow the restriction rules

- both ends non-symmetric: [a, 0] - [l, 0] iff l or l' is a one-box removal of a;
- symmetric top, non-symmetric bottom: both [a, +-] - [l, 0] iff l or l' is in a;
- non-symmetric top, symmetric bottom: [a, 0] - both [l, +-] iff l is in a or a';
- both symmetric: [a, +] - [l, +] and [a, -] - [l, -] iff l is in a.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import isqrt

from .errors import WeightMismatch
from .intmatrix import IrredundantMatrix, depth


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def is_symmetric(self) -> bool:
        return self == self.conjugate()

    def canonical(self) -> "Partition":
        """max(lam, lam') in lexicographic order."""
        return max(self, self.conjugate())

    def removals(self) -> list["Partition"]:
        """Partitions obtained by deleting one removable box."""
        out = []
        for i, p in enumerate(self):
            if i + 1 == len(self) or self[i + 1] < p:
                parts = list(self)
                parts[i] -= 1
                out.append(Partition(x for x in parts if x))
        return out

    def additions(self) -> list["Partition"]:
        out = []
        for i in range(len(self) + 1):
            if i == 0 or self[i - 1] > (self[i] if i < len(self) else 0):
                parts = list(self) + [0]
                parts[i] += 1
                out.append(Partition(x for x in parts if x))
        return out

    def contains(self, other: "Partition") -> bool:
        """Diagram inclusion [other] inside [self]."""
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, starting with (n)."""
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, cap), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def conjugate(lam) -> Partition:
    return Partition(lam).conjugate()


def is_symmetric(lam) -> bool:
    return Partition(lam).is_symmetric()


def young_distance(lam, mu) -> int:
    """|[lam] \\ [mu]| + |[mu] \\ [lam]| = 2 (n - |[lam] cap [mu]|)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise WeightMismatch(f"{lam} and {mu} have different weights")
    return 2 * (lam.weight - sum(min(a, b) for a, b in zip(lam, mu)))


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


# ---------------------------------------------------------------------------
# Branching graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BranchGraph:
    lower: tuple  # level-n vertices (matrix rows)
    upper: tuple  # level-(n+1) vertices (matrix columns)
    edges: frozenset[tuple[int, int]]  # (lower index, upper index)

    def matrix(self) -> IrredundantMatrix:
        return IrredundantMatrix(
            tuple(
                tuple(1 if (i, j) in self.edges else 0 for j in range(len(self.upper)))
                for i in range(len(self.lower))
            )
        )

    def lower_distances(self, start: int) -> list[int | None]:
        """Edge distances in the graph from lower vertex ``start`` to every lower vertex."""
        adj_l: dict[int, list[int]] = {}
        adj_u: dict[int, list[int]] = {}
        for i, j in self.edges:
            adj_l.setdefault(i, []).append(j)
            adj_u.setdefault(j, []).append(i)
        dist: list[int | None] = [None] * len(self.lower)
        dist[start] = 0
        seen_u: set[int] = set()
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in adj_l.get(i, ()):
                if j in seen_u:
                    continue
                seen_u.add(j)
                for k in adj_u[j]:
                    if dist[k] is None:
                        dist[k] = dist[i] + 2
                        queue.append(k)
        return dist


def sym_branch_graph(n: int) -> BranchGraph:
    lower = partitions(n)
    upper = partitions(n + 1)
    index = {lam: i for i, lam in enumerate(lower)}
    edges = frozenset((index[lam], j) for j, alpha in enumerate(upper) for lam in alpha.removals())
    return BranchGraph(tuple(lower), tuple(upper), edges)


def sym_inclusion_matrix(n: int) -> IrredundantMatrix:
    """Rows: partitions of n; columns: partitions of n+1; 1 where a box is removed."""
    return sym_branch_graph(n).matrix()


def sym_depth(n: int) -> int:
    if n < 1:
        raise ValueError("n >= 1")
    return 2 if n == 1 else 2 * n - 1


@dataclass(frozen=True)
class FamilyCheck:
    n: int
    closed_form: int
    matrix_depth: int
    distances_agree: bool

    @property
    def agree(self) -> bool:
        return self.closed_form == self.matrix_depth and self.distances_agree


def verify_sym_depth(n: int) -> FamilyCheck:
    """Closed form vs the matrix oracle, plus BFS distance == young_distance."""
    g = sym_branch_graph(n)
    ok = True
    for i, lam in enumerate(g.lower):
        dist = g.lower_distances(i)
        for j, mu in enumerate(g.lower):
            if dist[j] != young_distance(lam, mu):
                ok = False
    return FamilyCheck(n, sym_depth(n), depth(g.matrix()).depth, ok)


# ---------------------------------------------------------------------------
# Alternating groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SignedVertex:
    partition: Partition
    sign: str  # "0", "+" or "-"

    def __post_init__(self):
        if self.sign not in ("0", "+", "-"):
            raise ValueError(f"bad sign {self.sign!r}")
        sym = self.partition.is_symmetric()
        if sym == (self.sign == "0"):
            raise ValueError(f"sign {self.sign!r} does not fit {self.partition}")
        if not sym and self.partition < self.partition.conjugate():
            raise ValueError(f"{self.partition} is not the larger of its conjugate pair")

    def __str__(self) -> str:
        return f"[{self.partition!r},{self.sign}]"


def alt_vertices(n: int) -> list[SignedVertex]:
    out = []
    for lam in partitions(n):
        if lam.is_symmetric():
            out.append(SignedVertex(lam, "+"))
            out.append(SignedVertex(lam, "-"))
        elif lam > lam.conjugate():
            out.append(SignedVertex(lam, "0"))
    return out


def _alt_adjacent(top: SignedVertex, bottom: SignedVertex) -> bool:
    a, lam = top.partition, bottom.partition
    a_sym, l_sym = a.is_symmetric(), lam.is_symmetric()
    if l_sym:
        below = a.contains(lam) or (not a_sym and a.conjugate().contains(lam))
    else:
        below = a.contains(lam) or a.contains(lam.conjugate())
    if not below:
        return False
    if a_sym and l_sym:
        return top.sign == bottom.sign
    return True


def alt_branch_graph(n: int) -> BranchGraph:
    if n < 3:
        raise ValueError("alternating branching graph needs n >= 3")
    lower = alt_vertices(n)
    upper = alt_vertices(n + 1)
    edges = frozenset(
        (i, j)
        for i, v in enumerate(lower)
        for j, w in enumerate(upper)
        if _alt_adjacent(w, v)
    )
    return BranchGraph(tuple(lower), tuple(upper), edges)


def alt_inclusion_matrix(n: int) -> IrredundantMatrix:
    """Zero pattern of the A_n < A_(n+1) inclusion matrix (entries recorded as 1)."""
    return alt_branch_graph(n).matrix()


def alt_depth(n: int) -> int:
    if n < 2:
        raise ValueError("n >= 2")
    if n == 2:
        return 2
    return 2 * (n - ceil_sqrt(n)) + 1


def verify_alt_depth(n: int) -> FamilyCheck:
    m = alt_inclusion_matrix(n)
    return FamilyCheck(n, alt_depth(n), depth(m).depth, True)
