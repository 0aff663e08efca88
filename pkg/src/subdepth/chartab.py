"""Character tables, class functions and the induce/restrict operators.

Values are complex doubles; every integer that comes out of them (a
multiplicity, an operator entry, a structure constant) is rounded and the
rounding residual is checked.

Tables come from three sources: the generators below (cyclic, dihedral and
symmetric groups), the validated files bundled in ``subdepth/data/tables``,
and an optional user directory.  A table is attached to a concrete
permutation group by matching its columns to the group's conjugacy classes
so that class sizes and class-algebra structure constants agree; since the
class algebra determines the irreducible characters, a match certifies that
the table belongs to the group.  Fusion maps always come from ``perm``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import factorial, prod
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import perm
from .bratteli import EquivClasses, build_graph, equiv_classes, even_depth, odd_depth
from .errors import (
    MalformedFile,
    NonIntegerMultiplicity,
    NotACharacter,
    OrthogonalityFailure,
    RedundantResult,
    TablesUnavailable,
    TheoremViolation,
    UnsupportedSize,
    ZeroRowOrColumn,
)
from .intmatrix import DepthReport, IrredundantMatrix, depth as matrix_depth, matmul, transpose_rows
from .perm import Permutation, PermGroup
from .young import partitions

ROUND_TOL = 1e-6  # integer rounding of multiplicities et al.
VALID_TOL = 1e-6  # orthogonality residual accepted from a file
EXACT_TOL = 1e-8  # kernels, degrees, generated tables
MAX_SYMMETRIC = 8

FusionMap = Sequence[int]


# ---------------------------------------------------------------------------
# Tables and class functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Rows are irreducible characters, columns conjugacy classes (identity first)."""

    label: str
    sizes: tuple[int, ...]
    values: np.ndarray = field(repr=False)
    reps: tuple[Permutation, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        vals = np.array(self.values, dtype=complex)
        k = len(self.sizes)
        if vals.shape != (k, k):
            raise MalformedFile(f"{self.label}: expected a {k}x{k} table, got {vals.shape}")
        if self.reps is not None and len(self.reps) != k:
            raise MalformedFile(f"{self.label}: {len(self.reps)} representatives for {k} classes")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(round(v.real)) for v in self.values[:, 0])

    def irr(self, i: int) -> "ClassFunction":
        return ClassFunction(self, self.values[i])

    def irreducibles(self) -> list["ClassFunction"]:
        return [self.irr(i) for i in range(self.k)]

    def trivial(self) -> "ClassFunction":
        return ClassFunction(self, np.ones(self.k, dtype=complex))

    def regular(self) -> "ClassFunction":
        v = np.zeros(self.k, dtype=complex)
        v[0] = self.order
        return ClassFunction(self, v)

    def indicator(self, c: int) -> "ClassFunction":
        """gamma_C: 1 on class c, 0 elsewhere."""
        v = np.zeros(self.k, dtype=complex)
        v[c] = 1
        return ClassFunction(self, v)

    def class_function(self, values: Iterable[complex]) -> "ClassFunction":
        return ClassFunction(self, np.array(list(values), dtype=complex))


@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharacterTable = field(repr=False)
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=complex)
        if vals.shape != (self.table.k,):
            raise ValueError(f"class function needs {self.table.k} values, got {vals.shape}")
        object.__setattr__(self, "values", vals)

    def _other(self, other) -> np.ndarray:
        if isinstance(other, ClassFunction):
            if other.table is not self.table and other.table.sizes != self.table.sizes:
                raise ValueError("class functions on different tables")
            return other.values
        return other

    def __add__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, self.values + self._other(other))

    def __sub__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, self.values - self._other(other))

    def __mul__(self, other) -> "ClassFunction":
        return ClassFunction(self.table, self.values * self._other(other))

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n: int) -> "ClassFunction":
        return ClassFunction(self.table, self.values**n)

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.table, self.values.conj())

    @property
    def degree(self) -> complex:
        return self.values[0]

    def inner(self, other: "ClassFunction") -> complex:
        sizes = np.array(self.table.sizes, dtype=float)
        return complex(np.sum(sizes * self.values * np.conj(self._other(other))) / self.table.order)

    def decompose(self) -> np.ndarray:
        """Inner products with each irreducible."""
        sizes = np.array(self.table.sizes, dtype=float)
        return (self.table.values.conj() @ (sizes * self.values)) / self.table.order

    def multiplicities(self) -> tuple[int, ...]:
        """Irreducible multiplicities; raises NotACharacter unless they are nonnegative integers."""
        coeffs = self.decompose()
        out = []
        for c in coeffs:
            n = round(c.real)
            if abs(c - n) > ROUND_TOL or n < 0:
                raise NotACharacter(f"not a character: coefficient {c:.6g}")
            out.append(int(n))
        return tuple(out)

    def allclose(self, other, tol: float = ROUND_TOL) -> bool:
        return bool(np.max(np.abs(self.values - self._other(other)), initial=0.0) <= tol)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Residuals:
    rows: float
    columns: float
    degrees: float

    @property
    def max(self) -> float:
        return max(self.rows, self.columns, self.degrees)


def residuals(t: CharacterTable) -> Residuals:
    v = t.values
    sizes = np.array(t.sizes, dtype=float)
    gram = (v * sizes) @ v.conj().T / t.order
    rows = float(np.max(np.abs(gram - np.eye(t.k))))
    cols = v.conj().T @ v  # sum over characters: delta_CD |G|/|C|
    scale = np.sqrt(np.outer(sizes, sizes)) / t.order
    col = float(np.max(np.abs(cols * scale - np.eye(t.k))))
    degs = v[:, 0]
    deg = float(np.max(np.abs(degs - np.round(degs.real))))
    if t.sizes[0] != 1 or np.any(np.round(degs.real) < 1):
        deg = max(deg, 1.0)
    return Residuals(rows, col, deg)


def validate(t: CharacterTable, tol: float = VALID_TOL) -> Residuals:
    """Check both orthogonality relations and integrality of degrees."""
    if any(s <= 0 for s in t.sizes):
        raise MalformedFile(f"{t.label}: class sizes must be positive")
    res = residuals(t)
    if res.max > tol:
        raise OrthogonalityFailure(f"{t.label}: orthogonality residual {res.max:.3g} exceeds {tol:g}")
    return res


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _cycle_word(n: int, start: int = 1) -> str:
    return "(" + ",".join(str(i) for i in range(start, start + n)) + ")"


def _cyclic(n: int) -> CharacterTable:
    if n == 1:
        return CharacterTable("C1", (1,), np.ones((1, 1)), (Permutation.identity(1),))
    a = perm.parse_perm(_cycle_word(n), n)
    reps = [Permutation.identity(n)]
    for _ in range(n - 1):
        reps.append(a * reps[-1])
    jk = np.outer(np.arange(n), np.arange(n))
    vals = np.exp(2j * np.pi * jk / n)
    return CharacterTable(f"C{n}", (1,) * n, vals, tuple(reps))


def _dihedral(n: int) -> CharacterTable:
    """D_2n in the realization of ``perm.dihedral_group(n)``."""
    if n < 3:
        raise UnsupportedSize("dihedral tables need n >= 3; use cyclic or bundled V4 below that")
    g = perm.dihedral_group(n)
    a, b = (Permutation(x) for x in g.gens)
    rot = list(range(n // 2 + 1))
    rot_sizes = [1 if j == 0 or 2 * j == n else 2 for j in rot]
    power = [Permutation.identity(n)]
    for _ in range(n):
        power.append(a * power[-1])
    reps = [power[j] for j in rot]
    if n % 2:
        refl = [(b, 0)]
        refl_sizes = [n]
    else:
        refl = [(b, 0), (a * b, 1)]  # a^i b for i even / odd
        refl_sizes = [n // 2, n // 2]
    reps += [r for r, _ in refl]
    rows = []
    rows.append([1] * (len(rot) + len(refl)))
    rows.append([1] * len(rot) + [-1] * len(refl))
    if n % 2 == 0:
        rows.append([(-1) ** j for j in rot] + [(-1) ** i for _, i in refl])
        rows.append([(-1) ** j for j in rot] + [-((-1) ** i) for _, i in refl])
    for h in range(1, (n + 1) // 2):
        rows.append([2 * np.cos(2 * np.pi * h * j / n) for j in rot] + [0] * len(refl))
    return CharacterTable(f"D{2 * n}", tuple(rot_sizes + refl_sizes), np.array(rows, dtype=complex), tuple(reps))


def _beta(lam: Sequence[int], length: int) -> list[int]:
    return [p + length - 1 - i for i, p in enumerate(list(lam) + [0] * (length - len(lam)))]


@lru_cache(maxsize=None)
def symmetric_character(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """chi^lam on cycle type rho by the Murnaghan-Nakayama rule (rim hooks via beta-sets)."""
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = _beta(lam, length)
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in bset:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = sorted((bset - {b}) | {c}, reverse=True)
        mu = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        mu = tuple(p for p in mu if p)
        total += (-1) ** height * symmetric_character(mu, rest)
    return total


def centralizer_order(rho: Sequence[int]) -> int:
    return prod(i**rho.count(i) * factorial(rho.count(i)) for i in set(rho))


def cycle_type_rep(rho: Sequence[int], degree: int) -> Permutation:
    words, start = [], 1
    for p in rho:
        if p > 1:
            words.append(_cycle_word(p, start))
        start += p
    return perm.parse_perm("".join(words) or "()", degree)


def _symmetric(n: int) -> CharacterTable:
    if n > MAX_SYMMETRIC:
        raise UnsupportedSize(f"symmetric tables are limited to n <= {MAX_SYMMETRIC}")
    lams = partitions(n)
    classes = sorted(lams)  # (1^n) first
    sizes = tuple(factorial(n) // centralizer_order(rho) for rho in classes)
    vals = np.array([[symmetric_character(tuple(l), tuple(r)) for r in classes] for l in lams], dtype=complex)
    reps = tuple(cycle_type_rep(rho, n) for rho in classes)
    return CharacterTable(f"S{n}", sizes, vals, reps)


def table_generate(kind: str, n: int) -> CharacterTable:
    """Character table of C_n, D_2n (order 2n) or S_n."""
    if n < 1:
        raise UnsupportedSize("n must be at least 1")
    makers = {"cyclic": _cyclic, "dihedral": _dihedral, "symmetric": _symmetric}
    if kind not in makers:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {sorted(makers)}")
    t = makers[kind](n)
    res = residuals(t)
    if res.max > EXACT_TOL:
        raise OrthogonalityFailure(f"generated {t.label} table fails orthogonality ({res.max:.3g})")
    return t


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_VALUE = re.compile(rf"^(?P<re>[+-]?{_NUM})?(?:(?P<im>[+-]{_NUM}|[+-])i)?$")
_PURE_IM = re.compile(rf"^(?P<im>[+-]?{_NUM})i$")


def parse_value(tok: str) -> complex:
    m = _PURE_IM.match(tok)
    if m:
        return complex(0.0, float(m["im"]))
    m = _VALUE.match(tok)
    if not m or m["re"] is None:
        raise MalformedFile(f"bad character value {tok!r}")
    im = m["im"]
    if im in ("+", "-"):
        im += "1"
    return complex(float(m["re"]), float(im) if im else 0.0)


def format_value(z: complex) -> str:
    re_, im = z.real, z.imag
    re_ = 0.0 if abs(re_) < 1e-13 else re_
    im = 0.0 if abs(im) < 1e-13 else im
    text = f"{re_:.15g}"
    if im:
        text += f"{im:+.15g}i"
    return text


def _rep_degree(words: Sequence[str]) -> int:
    points = [int(x) for w in words for x in re.findall(r"\d+", w)]
    return max(points, default=1)


def parse_table(text: str) -> CharacterTable:
    fields: dict[str, list[str]] = {}
    chis: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        toks = rest.split()
        if key == "chi":
            chis.append(toks)
        elif key in ("group", "order", "classes", "sizes", "reps"):
            if key in fields:
                raise MalformedFile(f"line {lineno}: duplicate {key!r}")
            fields[key] = toks
        else:
            raise MalformedFile(f"line {lineno}: unknown keyword {key!r}")
    for key in ("group", "order", "classes", "sizes"):
        if key not in fields:
            raise MalformedFile(f"missing {key!r} line")
    try:
        order = int(fields["order"][0])
        k = int(fields["classes"][0])
        sizes = tuple(int(s) for s in fields["sizes"])
    except (ValueError, IndexError) as exc:
        raise MalformedFile(f"bad integer field: {exc}") from None
    if len(sizes) != k or sum(sizes) != order:
        raise MalformedFile(f"sizes {sizes} do not give {k} classes summing to {order}")
    if len(chis) != k or any(len(c) != k for c in chis):
        raise MalformedFile(f"expected {k} chi lines of {k} values")
    vals = np.array([[parse_value(tok) for tok in row] for row in chis], dtype=complex)
    reps = None
    if "reps" in fields:
        words = fields["reps"]
        if len(words) != k:
            raise MalformedFile(f"expected {k} class representatives")
        deg = _rep_degree(words)
        reps = tuple(perm.parse_perm(w, deg) for w in words)
    t = CharacterTable(" ".join(fields["group"]), sizes, vals, reps)
    validate(t)
    return t


def format_table(t: CharacterTable) -> str:
    lines = [
        f"group {t.label}",
        f"order {t.order}",
        f"classes {t.k}",
        "sizes " + " ".join(map(str, t.sizes)),
    ]
    if t.reps is not None:
        lines.append("reps " + " ".join(str(r) for r in t.reps))
    for row in t.values:
        lines.append("chi " + " ".join(format_value(z) for z in row))
    return "\n".join(lines) + "\n"


def load_table(path: str | os.PathLike) -> CharacterTable:
    return parse_table(Path(path).read_text())


BUNDLED_TABLES = (
    "S2", "S3", "S4", "S5", "S6", "D8", "D10", "D12", "A4", "A5", "A6",
    "C2", "C3", "C4", "C5", "C6", "V4",
)  # fmt: skip


@lru_cache(maxsize=None)
def bundled_table(label: str) -> CharacterTable:
    if label not in BUNDLED_TABLES:
        raise TablesUnavailable(f"no bundled table {label!r}")
    text = resources.files("subdepth.data.tables").joinpath(f"{label}.tbl").read_text()
    return parse_table(text)


def bundled_tables() -> list[CharacterTable]:
    return [bundled_table(label) for label in BUNDLED_TABLES]


# ---------------------------------------------------------------------------
# Attaching a table to a concrete group
# ---------------------------------------------------------------------------


def group_structure_constants(g: PermGroup) -> np.ndarray:
    """a[i, j, l] = #{(x, y) in C_i x C_j : xy = z_l} for a fixed z_l in C_l."""
    k = len(g.classes)
    a = np.zeros((k, k, k), dtype=np.int64)
    idx = g.class_index
    for l, cl in enumerate(g.classes):
        z = cl.representative
        for i, ci in enumerate(g.classes):
            for x in ci.elements:
                a[i, idx[perm.compose(perm.invert(x), z)], l] += 1
    return a


def table_structure_constants(t: CharacterTable) -> np.ndarray | None:
    """The same constants from character values; None if they are not integers."""
    v = t.values
    sizes = np.array(t.sizes, dtype=float)
    raw = np.einsum("xi,xj,xl,x->ijl", v, v, v.conj(), 1 / v[:, 0]).real
    raw *= np.outer(sizes, sizes)[:, :, None] / t.order
    rounded = np.round(raw)
    if np.max(np.abs(raw - rounded)) > ROUND_TOL or np.any(rounded < 0):
        return None
    return rounded.astype(np.int64)


def match_classes(
    t: CharacterTable, g: PermGroup, gconst: np.ndarray | None = None
) -> tuple[int, ...] | None:
    """A bijection (table column -> group class) preserving sizes and structure constants."""
    k = len(g.classes)
    gsizes = g.class_sizes()
    if t.k != k or t.order != g.order or sorted(t.sizes) != sorted(gsizes):
        return None
    tconst = table_structure_constants(t)
    if tconst is None:
        return None
    if gconst is None:
        gconst = group_structure_constants(g)
    gorders = g.elem_orders()
    torders = tuple(r.order() for r in t.reps) if t.reps is not None else None
    candidates = []
    for c in range(k):
        cand = [
            d for d in range(k)
            if gsizes[d] == t.sizes[c]
            and (torders is None or torders[c] == gorders[d])
            and tconst[c, c, c] == gconst[d, d, d]
        ]  # fmt: skip
        candidates.append(cand)
    if candidates[0] != [0] and 0 not in candidates[0]:
        return None
    candidates[0] = [0]
    order = sorted(range(k), key=lambda c: (c != 0, len(candidates[c]), c))
    assign = [-1] * k
    used = [False] * k
    placed: list[int] = []

    def consistent(c: int) -> bool:
        d = assign[c]
        for a in placed:
            da = assign[a]
            for b in placed:
                db = assign[b]
                if (
                    tconst[c, a, b] != gconst[d, da, db]
                    or tconst[a, c, b] != gconst[da, d, db]
                    or tconst[a, b, c] != gconst[da, db, d]
                ):
                    return False
        return True

    def search(pos: int) -> bool:
        if pos == k:
            return True
        c = order[pos]
        for d in candidates[c]:
            if used[d]:
                continue
            assign[c], used[d] = d, True
            placed.append(c)
            if consistent(c) and search(pos + 1):
                return True
            placed.pop()
            assign[c], used[d] = -1, False
        return False

    return tuple(assign) if search(0) else None


def bind_table(t: CharacterTable, g: PermGroup, gconst: np.ndarray | None = None) -> CharacterTable | None:
    """The table with columns reordered to g's class order, or None if it is not g's table."""
    mapping = match_classes(t, g, gconst)
    if mapping is None:
        return None
    vals = np.zeros_like(t.values)
    for c, d in enumerate(mapping):
        vals[:, d] = t.values[:, c]
    reps = tuple(Permutation(c.representative) for c in g.classes)
    return CharacterTable(t.label, g.class_sizes(), vals, reps)


def _dihedral_class_count(n: int) -> int:
    return (n + 3) // 2 if n % 2 else n // 2 + 3


class TableSource:
    """Where character tables are looked up: a directory, the bundled files, the generators."""

    def __init__(self, directory: str | os.PathLike | None = None, bundled: bool = True, generated: bool = True):
        self.directory = Path(directory) if directory else None
        self.bundled = bundled
        self.generated = generated

    @classmethod
    def from_env(cls, directory: str | os.PathLike | None = None) -> "TableSource":
        return cls(directory or os.environ.get("SUBDEPTH_TABLE_DIR") or None)

    def _directory_tables(self) -> list[CharacterTable]:
        if self.directory is None:
            return []
        if not self.directory.is_dir():
            raise TablesUnavailable(f"table directory {self.directory} does not exist")
        return [load_table(p) for p in sorted(self.directory.glob("*.tbl"))]

    def candidates(self, order: int, k: int) -> Iterator[CharacterTable]:
        for t in self._directory_tables():
            if t.order == order and t.k == k:
                yield t
        if self.bundled:
            for t in bundled_tables():
                if t.order == order and t.k == k:
                    yield t
        if self.generated:
            if k == order:
                yield table_generate("cyclic", order)
            if order % 2 == 0 and order >= 6 and _dihedral_class_count(order // 2) == k:
                yield table_generate("dihedral", order // 2)
            for m in range(2, MAX_SYMMETRIC + 1):
                if factorial(m) == order and len(partitions(m)) == k:
                    yield table_generate("symmetric", m)

    def table_for(self, g: PermGroup, name: str = "group") -> CharacterTable:
        k = len(g.classes)
        gconst = None
        for t in self.candidates(g.order, k):
            if gconst is None:
                gconst = group_structure_constants(g)
            bound = bind_table(t, g, gconst)
            if bound is not None:
                return bound
        where = [str(self.directory)] if self.directory else []
        where += ["bundled files"] if self.bundled else []
        where += ["generators"] if self.generated else []
        raise TablesUnavailable(
            f"no character table for the {name} (order {g.order}, {k} classes) in {', '.join(where) or 'nowhere'}"
        )


# ---------------------------------------------------------------------------
# Induction, restriction and the inclusion matrix
# ---------------------------------------------------------------------------


def _check_fusion(tg: CharacterTable, th: CharacterTable, fusion: FusionMap) -> None:
    if len(fusion) != th.k or any(not 0 <= c < tg.k for c in fusion):
        raise ValueError("fusion map does not fit the tables")
    if fusion[0] != 0:
        raise ValueError("the identity class must fuse to the identity class")
    inside = [0] * tg.k
    for d, c in enumerate(fusion):
        inside[c] += th.sizes[d]
    if any(n > s for n, s in zip(inside, tg.sizes)):
        raise ValueError("fusion map sends more elements into a class than it holds")


def induce(f: ClassFunction, fusion: FusionMap, tg: CharacterTable) -> ClassFunction:
    """f^G(C) = |G| / (|H||C|) * sum over H-classes D in C of |D| f(D)."""
    th = f.table
    out = np.zeros(tg.k, dtype=complex)
    for d, c in enumerate(fusion):
        out[c] += th.sizes[d] * f.values[d]
    out *= tg.order / (th.order * np.array(tg.sizes, dtype=float))
    return ClassFunction(tg, out)


def restrict(g: ClassFunction, fusion: FusionMap, th: CharacterTable) -> ClassFunction:
    return ClassFunction(th, g.values[list(fusion)])


def _round_matrix(raw: np.ndarray, what: str) -> tuple[tuple[int, ...], ...]:
    rounded = np.round(raw.real)
    err = float(np.max(np.abs(raw - rounded), initial=0.0))
    if err > ROUND_TOL:
        raise NonIntegerMultiplicity(f"{what}: residual {err:.3g} from the nearest integer")
    if np.any(rounded < 0):
        raise NonIntegerMultiplicity(f"{what}: negative multiplicity")
    return tuple(tuple(int(x) for x in row) for row in rounded)


def inclusion_matrix(tg: CharacterTable, th: CharacterTable, fusion: FusionMap) -> IrredundantMatrix:
    """m_ij = <psi_i, chi_j restricted to H>: rows Irr(H), columns Irr(G)."""
    _check_fusion(tg, th, fusion)
    res = tg.values[:, list(fusion)]  # chi_j on H-classes
    sizes = np.array(th.sizes, dtype=float)
    raw = (th.values.conj() * sizes) @ res.T / th.order
    rows = _round_matrix(raw, "inclusion matrix")
    try:
        return IrredundantMatrix(rows)
    except ZeroRowOrColumn as exc:
        raise RedundantResult(f"inclusion matrix has a zero row or column: {exc}") from None


@dataclass(frozen=True)
class TOperator:
    table: CharacterTable = field(repr=False)
    matrix: tuple[tuple[int, ...], ...]  # column j holds T(psi_j) in the Irr basis


def _operator_matrix(images: list[ClassFunction], what: str) -> tuple[tuple[int, ...], ...]:
    cols = np.array([f.decompose() for f in images])  # row j = coefficients of image j
    return _round_matrix(cols.T, what)


def t_operator(th: CharacterTable, tg: CharacterTable, fusion: FusionMap) -> TOperator:
    """Matrix of T(alpha) = alpha induced then restricted; checked against M M^t."""
    images = [restrict(induce(a, fusion, tg), fusion, th) for a in th.irreducibles()]
    mat = _operator_matrix(images, "T operator")
    m = inclusion_matrix(tg, th, fusion)
    if mat != matmul(m.entries, transpose_rows(m.entries)):
        raise TheoremViolation("T operator differs from M M^t")
    return TOperator(th, mat)


def u_operator(tg: CharacterTable, th: CharacterTable, fusion: FusionMap) -> tuple[tuple[int, ...], ...]:
    """Matrix of U(chi) = chi restricted then induced; checked against M^t M."""
    images = [induce(restrict(c, fusion, th), fusion, tg) for c in tg.irreducibles()]
    mat = _operator_matrix(images, "U operator")
    m = inclusion_matrix(tg, th, fusion)
    if mat != matmul(transpose_rows(m.entries), m.entries):
        raise TheoremViolation("U operator differs from M^t M")
    return mat


def t_apply(f: ClassFunction, fusion: FusionMap, tg: CharacterTable) -> ClassFunction:
    return restrict(induce(f, fusion, tg), fusion, f.table)


def u_apply(f: ClassFunction, fusion: FusionMap, th: CharacterTable) -> ClassFunction:
    return induce(restrict(f, fusion, th), fusion, f.table)


def char_kernel(t: CharacterTable, f: ClassFunction) -> frozenset[int]:
    """Classes on which the character f takes its degree."""
    f.multiplicities()  # raises NotACharacter
    return frozenset(c for c in range(t.k) if abs(f.values[c] - f.values[0]) <= EXACT_TOL)


def partition_residual(
    tg: CharacterTable, th: CharacterTable, fusion: FusionMap, components: EquivClasses
) -> float:
    """Largest deviation in the regular-character identities of each component.

    For a component with G-irreducibles A and H-irreducibles B:
    (sum_A chi(1) chi) restricted = [G:H] sum_B alpha(1) alpha, and
    (sum_B alpha(1) alpha) induced = sum_A chi(1) chi.
    """
    index = tg.order / th.order
    worst = 0.0
    for bottom, top in zip(components.bottom, components.top):
        reg_g = sum((tg.irr(j) * tg.degrees[j] for j in top), tg.class_function([0] * tg.k))
        reg_h = sum((th.irr(i) * th.degrees[i] for i in bottom), th.class_function([0] * th.k))
        down = restrict(reg_g, fusion, th) - reg_h * index
        up = induce(reg_h, fusion, tg) - reg_g
        worst = max(worst, float(np.max(np.abs(down.values))), float(np.max(np.abs(up.values))))
    return worst


def irr_orbit_count(g: PermGroup, n: PermGroup, tn: CharacterTable) -> int:
    """Number of orbits of g, acting by conjugation, on the irreducible characters of n.

    ``tn`` must be bound to n (columns in n's class order).
    """
    k = tn.k
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in g.gens:
        si = perm.invert(s)
        pi = [n.class_index[perm.compose(perm.compose(s, c.representative), si)] for c in n.classes]
        for r in range(k):
            moved = np.empty(k, dtype=complex)
            moved[pi] = tn.values[r]
            dist = np.max(np.abs(tn.values - moved), axis=1)
            target = int(np.argmin(dist))
            if dist[target] > ROUND_TOL:
                raise TheoremViolation("conjugation does not permute the irreducible characters")
            parent[find(r)] = find(target)
    return len({find(r) for r in range(k)})


# ---------------------------------------------------------------------------
# The group pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupAnalysis:
    group_label: str
    subgroup_label: str
    fusion: tuple[int, ...]
    matrix: IrredundantMatrix
    report: DepthReport
    odd_depth: int
    even_depth: int
    components: EquivClasses
    bounds: perm.BoundsReport
    core_classes: int  # G-classes inside the core = G-orbits on Irr(core)
    numeric_eigenvalues: tuple[float, ...]
    group_classes: int
    subgroup_classes: int

    @property
    def depth(self) -> int:
        return self.report.depth


def _eigen_check(m: IrredundantMatrix, ev: perm.EigenvalueReport) -> tuple[float, ...]:
    s = np.array(m.square, dtype=float)
    numeric = np.sort(np.linalg.eigvalsh(s))[::-1]
    exact = sorted((float(v) for v in ev.values), reverse=True) + [0.0] * ev.zero_multiplicity
    if len(exact) != len(numeric) or np.max(np.abs(numeric - np.array(exact))) > ROUND_TOL:
        raise TheoremViolation(f"eigenvalues of M M^t {numeric} differ from {exact}")
    return tuple(float(x) for x in numeric)


def group_depth(
    g: PermGroup,
    h: PermGroup,
    source: TableSource | None = None,
    limit: int = 8,
    tables: tuple[CharacterTable, CharacterTable] | None = None,
) -> GroupAnalysis:
    """Inclusion matrix from character tables, its depth, and the bounds from perm.

    Theorem-level consistency is checked along the way: eigenvalues match the
    class-intersection formula, each bound is at least the depth, and H is
    normal exactly when the depth is 2.
    """
    fus = perm.fusion(g, h)
    if tables is None:
        source = source or TableSource.from_env()
        tg = source.table_for(g, "group")
        th = source.table_for(h, "subgroup")
    else:
        tg, th = tables
    m = inclusion_matrix(tg, th, fus)
    report = matrix_depth(m)
    graph = build_graph(m)
    odd, even = odd_depth(graph), even_depth(graph)
    if max(2, min(odd, even)) != report.depth:
        raise TheoremViolation("graph depth differs from matrix depth")
    bounds = perm.depth_bounds(g, h, limit)
    eff = report.effective_depth
    for name, b in bounds.bounds.items():
        if b < eff:
            raise TheoremViolation(f"{name} bound {b} is below the depth {eff}")
    if bounds.is_normal != (report.depth == 2):
        raise TheoremViolation("normality does not match depth 2")
    numeric = _eigen_check(m, bounds.eigenvalues)
    core = perm.core(g, h)
    return GroupAnalysis(
        group_label=tg.label,
        subgroup_label=th.label,
        fusion=tuple(fus),
        matrix=m,
        report=report,
        odd_depth=odd,
        even_depth=even,
        components=equiv_classes(graph),
        bounds=bounds,
        core_classes=perm.classes_inside(g, core),
        numeric_eigenvalues=numeric,
        group_classes=tg.k,
        subgroup_classes=th.k,
    )
