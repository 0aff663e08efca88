"""Permutation groups by explicit enumeration.

Group elements are image tuples on 0..n-1 internally; cycle notation on the
outside is 1-based.  Products compose right to left: ``(p * q)(x) = p(q(x))``.
Conjugates are written xHx^-1, so H^g in the usual exponent notation is the
conjugate by g^-1.

Everything here is sized for groups up to a few tens of thousands of elements
(S_8 has 40320): elements are enumerated, classes are orbits under
conjugation by generators, and normalizers come from Schreier generators of
the conjugation action on subgroups.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import (
    BadCycleSyntax,
    CapExceeded,
    NotASubgroup,
    NotNormal,
    PointOutOfRange,
    RepeatedPoint,
)

Elem = tuple[int, ...]

DEFAULT_CAP = 500_000


def compose(p: Elem, q: Elem) -> Elem:
    return tuple(p[i] for i in q)


def invert(p: Elem) -> Elem:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity(n: int) -> Elem:
    return tuple(range(n))


def elem_order(p: Elem) -> int:
    return lcm(*cycle_type(p)) if p else 1


def cycle_type(p: Elem) -> tuple[int, ...]:
    """Cycle lengths in weakly decreasing order, fixed points included."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def format_cycles(p: Elem) -> str:
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


@dataclass(frozen=True, order=True)
class Permutation:
    img: Elem

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(compose(self.img, other.img))

    def inverse(self) -> "Permutation":
        return Permutation(invert(self.img))

    def order(self) -> int:
        return elem_order(self.img)

    def __str__(self) -> str:
        return format_cycles(self.img)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(identity(degree))


_CYCLE_WORD = re.compile(r"^(\(\s*\d+(\s*,\s*\d+)*\s*\)|\(\s*\))*$")


def parse_perm(cycles: str, degree: int) -> Permutation:
    """Parse disjoint cycle notation such as ``(1,2,3)(4,5)``; ``()`` is the identity."""
    text = re.sub(r"\s+", "", cycles)
    if not _CYCLE_WORD.match(text):
        raise BadCycleSyntax(f"cannot parse cycle word {cycles!r}")
    img = list(range(degree))
    used: set[int] = set()
    for body in re.findall(r"\(([^()]*)\)", text):
        if not body:
            continue
        points = [int(tok) for tok in body.split(",")]
        for pt in points:
            if pt < 1 or pt > degree:
                raise PointOutOfRange(f"point {pt} outside 1..{degree}")
            if pt in used:
                raise RepeatedPoint(f"point {pt} repeated in {cycles!r}")
            used.add(pt)
        for a, b in zip(points, points[1:] + points[:1]):
            img[a - 1] = b - 1
    return Permutation(tuple(img))


def split_generators(text: str) -> list[str]:
    """Split ``(1,2),(1,2,3,4)`` into cycle words at top-level commas/semicolons."""
    words, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise BadCycleSyntax(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in ",;":
            words.append("".join(cur))
            cur = []
            continue
        cur.append(ch)
    if depth != 0:
        raise BadCycleSyntax(f"unbalanced parentheses in {text!r}")
    words.append("".join(cur))
    return [w.strip() for w in words if w.strip()]


def parse_generators(text: str, degree: int) -> list[Permutation]:
    return [parse_perm(w, degree) for w in split_generators(text)]


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    representative: Elem
    elements: frozenset[Elem]

    @property
    def size(self) -> int:
        return len(self.elements)


class PermGroup:
    """A permutation group with all of its elements listed in sorted order."""

    def __init__(self, degree: int, gens: Iterable[Elem], elements: Iterable[Elem]):
        self.degree = degree
        self.gens = tuple(gens)
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        if isinstance(p, Permutation):
            p = p.img
        return p in self.element_set

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @cached_property
    def classes(self) -> tuple[ConjClass, ...]:
        """Conjugacy classes ordered by least element; the identity class is first."""
        seen: set[Elem] = set()
        out = []
        conjugators = [(s, invert(s)) for s in self.gens]
        for x in self.elements:
            if x in seen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for s, si in conjugators:
                    z = compose(compose(s, y), si)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            seen |= orbit
            out.append(ConjClass(x, frozenset(orbit)))
        return tuple(out)

    @cached_property
    def class_index(self) -> dict[Elem, int]:
        return {x: k for k, c in enumerate(self.classes) for x in c.elements}

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def elem_orders(self) -> tuple[int, ...]:
        return tuple(elem_order(c.representative) for c in self.classes)

    def issubgroup(self, other: "PermGroup") -> bool:
        """True iff self is contained in other."""
        return self.degree == other.degree and self.element_set <= other.element_set

    def permutations(self) -> list[Permutation]:
        return [Permutation(x) for x in self.elements]


def _closure(degree: int, gens: Sequence[Elem], cap: int) -> set[Elem]:
    e = identity(degree)
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(s, x)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
                    if len(elems) > cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    return elems


def generate(
    gens: Sequence[Permutation], degree: int | None = None, cap: int = DEFAULT_CAP
) -> PermGroup:
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    raw = [g.img for g in gens]
    if any(len(g) != degree for g in raw):
        raise ValueError("generators must all have the given degree")
    return PermGroup(degree, raw, _closure(degree, raw, cap))


def subgroup_from_elements(degree: int, elements: Iterable[Elem]) -> PermGroup:
    """Wrap a set already known to be a subgroup, choosing a small generating set."""
    elements = sorted(elements)
    gens: list[Elem] = []
    span = {identity(degree)}
    for x in elements:
        if x not in span:
            gens.append(x)
            span = _closure(degree, gens, len(elements))
    return PermGroup(degree, gens, elements)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [], [identity(1)])
    gens = [parse_perm("(1,2)", n)]
    if n > 2:
        gens.append(parse_perm("(" + ",".join(map(str, range(1, n + 1))) + ")", n))
    return generate(gens, n)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(n, [], [identity(n)])
    gens = [parse_perm(f"(1,2,{k})", n) for k in range(3, n + 1)]
    return generate(gens, n)


def dihedral_group(n: int, degree: int | None = None) -> PermGroup:
    """D_2n on n points: rotation (1..n) and reflection (1,n)(2,n-1)..."""
    degree = degree or n
    rot = parse_perm("(" + ",".join(map(str, range(1, n + 1))) + ")", degree)
    pairs = "".join(f"({i},{n + 1 - i})" for i in range(1, n // 2 + 1))
    return generate([rot, parse_perm(pairs, degree)], degree)


def cyclic_group(n: int, degree: int | None = None) -> PermGroup:
    degree = degree or n
    if n == 1:
        return PermGroup(degree, [], [identity(degree)])
    return generate([parse_perm("(" + ",".join(map(str, range(1, n + 1))) + ")", degree)], degree)


# ---------------------------------------------------------------------------
# Subgroup structure
# ---------------------------------------------------------------------------


def _require_subgroup(g: PermGroup, h: PermGroup) -> None:
    if not h.issubgroup(g):
        raise NotASubgroup("subgroup is not contained in the group")


def fusion(g: PermGroup, h: PermGroup) -> tuple[int, ...]:
    """For each class of h, the index of the class of g containing it."""
    _require_subgroup(g, h)
    return tuple(g.class_index[c.representative] for c in h.classes)


def class_intersection_sizes(g: PermGroup, h: PermGroup) -> tuple[int, ...]:
    """|C cap H| for every class C of g, summed over the h-classes fusing into C."""
    sizes = [0] * len(g.classes)
    for c, k in zip(h.classes, fusion(g, h)):
        sizes[k] += c.size
    return tuple(sizes)


def is_normal(g: PermGroup, h: PermGroup) -> bool:
    _require_subgroup(g, h)
    for s in g.gens:
        si = invert(s)
        for x in h.gens:
            if compose(compose(s, x), si) not in h.element_set:
                return False
    return True


def center(g: PermGroup) -> PermGroup:
    elems = [x for x in g.elements if all(compose(x, s) == compose(s, x) for s in g.gens)]
    return subgroup_from_elements(g.degree, elems)


def conjugate_set(x: Elem, elems: Iterable[Elem]) -> frozenset[Elem]:
    xi = invert(x)
    return frozenset(compose(compose(x, h), xi) for h in elems)


@dataclass(frozen=True)
class Conjugates:
    """Distinct conjugates xHx^-1, each with its lexicographically least conjugator."""

    conjugators: tuple[Elem, ...]
    subgroups: tuple[frozenset[Elem], ...]
    normalizer: PermGroup


def conjugates(g: PermGroup, h: PermGroup) -> Conjugates:
    _require_subgroup(g, h)
    base = h.element_set
    found = {base: identity(g.degree)}
    order = [base]
    schreier: set[Elem] = set()
    i = 0
    while i < len(order):
        k = order[i]
        t = found[k]
        for s in g.gens:
            img = conjugate_set(s, k)
            st = compose(s, t)
            if img not in found:
                found[img] = st
                order.append(img)
            else:
                schreier.add(compose(invert(found[img]), st))
        i += 1
    schreier.discard(identity(g.degree))
    norm_elems = _closure(g.degree, sorted(schreier), g.order)
    normalizer = PermGroup(g.degree, sorted(schreier), norm_elems)
    pairs = []
    for k in order:
        t = found[k]
        pairs.append((min(compose(t, n) for n in normalizer.elements), k))
    pairs.sort()
    return Conjugates(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), normalizer)


def normalizer(g: PermGroup, h: PermGroup) -> PermGroup:
    return conjugates(g, h).normalizer


def core(g: PermGroup, h: PermGroup) -> PermGroup:
    """Largest normal subgroup of g inside h: the intersection of all conjugates."""
    conj = conjugates(g, h)
    inter = set(h.element_set)
    for k in conj.subgroups:
        inter &= k
    return subgroup_from_elements(g.degree, inter)


@dataclass(frozen=True)
class ConjugateIntersection:
    m: int
    conjugators: tuple[Permutation, ...]
    exact: bool  # False: greedy search, m is only an upper bound


def min_conjugate_intersections(g: PermGroup, h: PermGroup, limit: int = 8) -> ConjugateIntersection:
    """Fewest conjugates of h whose intersection is the core.

    h itself is always one of them.  The search is exhaustive over subsets of
    the distinct conjugates when there are at most ``limit`` of them, greedy
    otherwise.
    """
    conj = conjugates(g, h)
    target = set(h.element_set)
    for k in conj.subgroups:
        target &= k
    core_size = len(target)
    base = conj.subgroups[0]
    e = Permutation(identity(g.degree))
    if len(base) == core_size:
        return ConjugateIntersection(1, (e,), True)
    others = list(range(1, len(conj.subgroups)))
    pair = {j: base & conj.subgroups[j] for j in others}

    def witness(idx: Sequence[int]) -> tuple[Permutation, ...]:
        return (e,) + tuple(Permutation(conj.conjugators[j]) for j in idx)

    if len(conj.subgroups) <= limit:
        for size in range(1, len(others) + 1):
            for combo in combinations(others, size):
                inter = pair[combo[0]]
                for j in combo[1:]:
                    if len(inter) == core_size:
                        break
                    inter = inter & conj.subgroups[j]
                if len(inter) == core_size:
                    return ConjugateIntersection(size + 1, witness(combo), True)
        raise AssertionError("the full set of conjugates always meets in the core")

    chosen: list[int] = []
    inter = set(base)
    while len(inter) > core_size:
        best = min(others, key=lambda j: (len(inter & conj.subgroups[j]), j))
        chosen.append(best)
        inter &= conj.subgroups[best]
    m = len(chosen) + 1
    # m = 2 is optimal whenever h is not normal
    return ConjugateIntersection(m, witness(chosen), m == 2)


# ---------------------------------------------------------------------------
# Eigenvalues of the induce-restrict operator and the resulting bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenvalueReport:
    values: tuple[Fraction, ...]  # one per class of g meeting h, in class order
    classes: tuple[int, ...]
    zero_multiplicity: int
    fusion_injective: bool

    @property
    def distinct(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values), reverse=True))

    @property
    def t(self) -> int:
        return len(set(self.values))

    @property
    def odd_bound(self) -> int:
        return 2 * self.t - 1 if self.fusion_injective else 2 * self.t + 1

    def with_multiplicity(self) -> list[tuple[Fraction, int]]:
        out = [(v, self.values.count(v)) for v in self.distinct]
        if self.zero_multiplicity:
            out.append((Fraction(0), self.zero_multiplicity))
        return out


def eigenvalue_report(g: PermGroup, h: PermGroup) -> EigenvalueReport:
    """Nonzero eigenvalues |G|/|H| * |C cap H|/|C| of the induce-restrict operator."""
    inter = class_intersection_sizes(g, h)
    idx = tuple(k for k, n in enumerate(inter) if n)
    index = Fraction(g.order, h.order)
    values = tuple(index * Fraction(inter[k], g.classes[k].size) for k in idx)
    n_h = len(h.classes)
    return EigenvalueReport(values, idx, n_h - len(idx), n_h == len(idx))


@dataclass(frozen=True)
class BoundsReport:
    group_order: int
    subgroup_order: int
    core_order: int
    is_normal: bool
    min_conjugates: ConjugateIntersection
    core_central: bool
    normalizer_index: int
    eigenvalues: EigenvalueReport

    @property
    def core_bound(self) -> int:
        m = self.min_conjugates.m
        return 2 * m - 1 if self.core_central else 2 * m

    @property
    def eigen_bound(self) -> int:
        return self.eigenvalues.odd_bound

    @property
    def normalizer_bound(self) -> int:
        return 2 * self.normalizer_index

    @property
    def bounds(self) -> dict[str, int]:
        return {
            "core": self.core_bound,
            "eigenvalue": self.eigen_bound,
            "normalizer": self.normalizer_bound,
        }


def depth_bounds(g: PermGroup, h: PermGroup, limit: int = 8) -> BoundsReport:
    conj = conjugates(g, h)
    n = core(g, h)
    z = center(g)
    return BoundsReport(
        group_order=g.order,
        subgroup_order=h.order,
        core_order=n.order,
        is_normal=is_normal(g, h),
        min_conjugates=min_conjugate_intersections(g, h, limit),
        core_central=n.element_set <= z.element_set,
        normalizer_index=len(conj.subgroups),
        eigenvalues=eigenvalue_report(g, h),
    )


def classes_inside(g: PermGroup, n: PermGroup) -> int:
    """Number of g-classes contained in a normal subgroup n.

    This equals the number of g-orbits on the classes of n, and by Brauer's
    permutation lemma the number of g-orbits on Irr(n).
    """
    if not is_normal(g, n):
        raise NotNormal("subgroup is not normal")
    return len({g.class_index[x] for x in n.elements})


# ---------------------------------------------------------------------------
# Quotients
# ---------------------------------------------------------------------------


class CosetAction:
    """Left multiplication of g on the cosets xN of a normal subgroup N."""

    def __init__(self, g: PermGroup, n: PermGroup):
        _require_subgroup(g, n)
        if not is_normal(g, n):
            raise NotNormal("quotient requires a normal subgroup")
        self.source = g
        self.kernel = n
        cosets: dict[Elem, int] = {}
        reps: list[Elem] = []
        for x in g.elements:
            if x in cosets:
                continue
            k = len(reps)
            reps.append(x)
            for y in n.elements:
                cosets[compose(x, y)] = k
        self._coset = cosets
        self._reps = tuple(reps)
        self.group = generate([self.image(Permutation(s)) for s in g.gens], degree=len(reps))

    @property
    def degree(self) -> int:
        return len(self._reps)

    def image(self, p: Permutation) -> Permutation:
        return Permutation(tuple(self._coset[compose(p.img, r)] for r in self._reps))

    def image_group(self, h: PermGroup) -> PermGroup:
        _require_subgroup(self.source, h)
        return generate([self.image(Permutation(s)) for s in h.gens], degree=self.degree)


def quotient_action(g: PermGroup, n: PermGroup) -> PermGroup:
    return CosetAction(g, n).group
