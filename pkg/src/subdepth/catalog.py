"""Named subgroup pairs whose character tables all ship with the package."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perm import PermGroup, generate, parse_generators

_S = {3: "(1,2),(1,2,3)", 4: "(1,2),(1,2,3,4)", 5: "(1,2),(1,2,3,4,5)", 6: "(1,2),(1,2,3,4,5,6)"}
_A = {4: "(1,2,3),(1,2,4)", 5: "(1,2,3),(1,2,4),(1,2,5)", 6: "(1,2,3),(1,2,4),(1,2,5),(1,2,6)"}


@dataclass(frozen=True)
class PairSpec:
    name: str
    degree: int
    group: str
    subgroup: str
    note: str = ""

    def build(self) -> tuple[PermGroup, PermGroup]:
        return _build(self.degree, self.group), _build(self.degree, self.subgroup)


@lru_cache(maxsize=None)
def _build(degree: int, gens: str) -> PermGroup:
    return generate(parse_generators(gens, degree), degree)


PAIRS: tuple[PairSpec, ...] = (
    PairSpec("S2<S3", 3, _S[3], "(1,2)"),
    PairSpec("A3<S3", 3, _S[3], "(1,2,3)", "normal"),
    PairSpec("S3<S3", 3, _S[3], _S[3], "trivial inclusion"),
    PairSpec("S3<S4", 4, _S[4], "(1,2),(1,2,3)"),
    PairSpec("D8<S4", 4, _S[4], "(1,2,3,4),(1,4)(2,3)", "core V4"),
    PairSpec("C4<S4", 4, _S[4], "(1,2,3,4)", "contains an n-cycle"),
    PairSpec("V4<S4", 4, _S[4], "(1,2)(3,4),(1,3)(2,4)", "normal"),
    PairSpec("A4<S4", 4, _S[4], _A[4], "normal"),
    PairSpec("V4<A4", 4, _A[4], "(1,2)(3,4),(1,3)(2,4)", "normal"),
    PairSpec("C3<A4", 4, _A[4], "(1,2,3)"),
    PairSpec("S4<S5", 5, _S[5], "(1,2),(1,2,3,4)"),
    PairSpec("D10<S5", 5, _S[5], "(1,2,3,4,5),(1,5)(2,4)", "dihedral"),
    PairSpec("C5<S5", 5, _S[5], "(1,2,3,4,5)", "contains an n-cycle"),
    PairSpec("A5<S5", 5, _S[5], _A[5], "normal"),
    PairSpec("A4<A5", 5, _A[5], _A[4]),
    PairSpec("C5<A5", 5, _A[5], "(1,2,3,4,5)"),
    PairSpec("S5<S6", 6, _S[6], "(1,2),(1,2,3,4,5)"),
    PairSpec("A5<A6", 6, _A[6], _A[5]),
    PairSpec("D12<S6", 6, _S[6], "(1,2,3,4,5,6),(1,6)(2,5)(3,4)", "dihedral"),
    PairSpec("C6<S6", 6, _S[6], "(1,2,3,4,5,6)", "contains an n-cycle"),
)


def pair(name: str) -> PairSpec:
    for p in PAIRS:
        if p.name == name:
            return p
    raise KeyError(f"unknown pair {name!r}; known: {', '.join(p.name for p in PAIRS)}")
