"""Exact arithmetic on irredundant matrices and the depth of an inclusion matrix.

An irredundant matrix is an r x s matrix of nonnegative integers with no zero
row and no zero column.  Its alternating powers are

    M^1 = M,  M^2 = M M^t,  M^3 = M M^t M,  ...

so odd powers are r x s and even powers are symmetric r x r.  The depth is the
least n >= 2 such that M^(n+1) <= q M^(n-1) for some positive integer q.  That
inequality holds iff both powers have the same zero pattern, so depth is found
on boolean matrices (row bitsets) and q is recovered afterwards from the exact
integer powers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MalformedFile, TheoremViolation, ZeroRowOrColumn

IntRows = tuple[tuple[int, ...], ...]


def _as_rows(rows: Iterable[Iterable[int]]) -> IntRows:
    return tuple(tuple(int(x) for x in row) for row in rows)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntRows:
    """Exact product of two integer matrices given as row sequences."""
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def transpose_rows(a: Sequence[Sequence[int]]) -> IntRows:
    return tuple(zip(*a))


@dataclass(frozen=True)
class IrredundantMatrix:
    entries: IntRows

    def __post_init__(self):
        entries = _as_rows(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries or not entries[0]:
            raise MalformedFile("matrix must have at least one row and one column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise MalformedFile("ragged matrix rows")
        if any(x < 0 for row in entries for x in row):
            raise MalformedFile("entries must be nonnegative")
        for i, row in enumerate(entries):
            if not any(row):
                raise ZeroRowOrColumn(f"row {i + 1} is zero")
        for j in range(width):
            if not any(row[j] for row in entries):
                raise ZeroRowOrColumn(f"column {j + 1} is zero")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IrredundantMatrix":
        return cls(_as_rows(rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "IrredundantMatrix":
        return IrredundantMatrix(transpose_rows(self.entries))

    @property
    def T(self) -> "IrredundantMatrix":
        return self.transpose()

    @cached_property
    def square(self) -> IntRows:
        """The symmetric square M M^t (computed once per matrix)."""
        return matmul(self.entries, transpose_rows(self.entries))

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "IrredundantMatrix":
        """Row i of the result is row ``row_order[i]`` of self, same for columns."""
        return IrredundantMatrix(
            tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order)
        )

    def to_text(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append(f"{self.rows} {self.cols}")
        lines.extend(" ".join(str(x) for x in row) for row in self.entries)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)


def parse_matrix(text: str) -> IrredundantMatrix:
    """Parse the plain-text matrix format: ``r s`` header then r rows of s integers.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedFile("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise MalformedFile(f"bad header line {lines[0]!r}; expected 'r s'")
    r, s = int(header[0]), int(header[1])
    if r < 1 or s < 1:
        raise MalformedFile("matrix dimensions must be positive")
    body = lines[1:]
    if len(body) != r:
        raise MalformedFile(f"expected {r} rows, found {len(body)}")
    rows = []
    for k, line in enumerate(body, start=1):
        toks = line.split()
        if len(toks) != s:
            raise MalformedFile(f"row {k}: expected {s} entries, found {len(toks)}")
        if not all(tok.isdigit() for tok in toks):
            raise MalformedFile(f"row {k}: entries must be nonnegative decimal integers")
        rows.append(tuple(int(tok) for tok in toks))
    return IrredundantMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# Alternating powers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AltPower:
    base: IrredundantMatrix
    exponent: int
    value: IntRows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.value), len(self.value[0])


def _int_power_sequence(m: IrredundantMatrix, k: int) -> IntRows:
    # M^(2j) = S^j, M^(2j+1) = S^j M
    s = m.square
    if k % 2 == 0:
        value, steps = s, k // 2 - 1
    else:
        value, steps = m.entries, (k - 1) // 2
    for _ in range(steps):
        value = matmul(s, value)
    return value


def alt_power(m: IrredundantMatrix, k: int) -> AltPower:
    if k < 1:
        raise ValueError("exponent must be >= 1")
    return AltPower(m, k, _int_power_sequence(m, k))


def alternating_product(m: IrredundantMatrix, factors: int) -> IntRows:
    """M M^t M ... with ``factors`` factors; same as ``alt_power(m, factors).value``."""
    return alt_power(m, factors).value


# ---------------------------------------------------------------------------
# Boolean semiring
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroPattern:
    """Zero pattern of an integer matrix, stored as support bitsets per row.

    Bit j of ``support[i]`` is set iff entry (i, j) is nonzero, so the zero set
    Z(M) is the complement of the set bits within ``shape``.
    """

    shape: tuple[int, int]
    support: tuple[int, ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "ZeroPattern":
        ncols = len(rows[0])
        bits = []
        for row in rows:
            b = 0
            for j, x in enumerate(row):
                if x:
                    b |= 1 << j
            bits.append(b)
        return cls((len(rows), ncols), tuple(bits))

    def zeros(self) -> frozenset[tuple[int, int]]:
        r, s = self.shape
        return frozenset(
            (i, j) for i in range(r) for j in range(s) if not (self.support[i] >> j) & 1
        )

    def nonzeros(self) -> frozenset[tuple[int, int]]:
        r, s = self.shape
        return frozenset((i, j) for i in range(r) for j in range(s) if (self.support[i] >> j) & 1)

    def issubset_zeros(self, other: "ZeroPattern") -> bool:
        """True iff Z(self) is contained in Z(other)."""
        return self.shape == other.shape and all(
            (b | a) == a for a, b in zip(self.support, other.support)
        )

    def is_full(self) -> bool:
        full = (1 << self.shape[1]) - 1
        return all(b == full for b in self.support)

    def is_diagonal(self) -> bool:
        return all(b & ~(1 << i) == 0 for i, b in enumerate(self.support))


def bool_mul(a: ZeroPattern, b: ZeroPattern) -> ZeroPattern:
    """Product over the boolean semiring: row i of the result ORs the rows of b
    selected by row i of a."""
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    out = []
    for bits in a.support:
        acc = 0
        k = 0
        while bits:
            if bits & 1:
                acc |= b.support[k]
            bits >>= 1
            k += 1
        out.append(acc)
    return ZeroPattern((a.shape[0], b.shape[1]), tuple(out))


def bool_transpose(p: ZeroPattern) -> ZeroPattern:
    r, s = p.shape
    cols = []
    for j in range(s):
        b = 0
        for i in range(r):
            if (p.support[i] >> j) & 1:
                b |= 1 << i
        cols.append(b)
    return ZeroPattern((s, r), tuple(cols))


def bool_alt_powers(m: IrredundantMatrix, upto: int) -> list[ZeroPattern]:
    """Patterns of M^1..M^upto; index 0 of the returned list is M^1."""
    p = ZeroPattern.of(m.entries)
    pt = bool_transpose(p)
    out = [p]
    for k in range(2, upto + 1):
        out.append(bool_mul(out[-1], pt if k % 2 == 0 else p))
    return out


# ---------------------------------------------------------------------------
# Depth
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DepthReport:
    depth: int
    minimal_q: int
    stabilization_witness: tuple[ZeroPattern, ZeroPattern]
    depth_one: bool

    @property
    def effective_depth(self) -> int:
        """1 for depth-one inclusions, otherwise ``depth``."""
        return 1 if self.depth_one else self.depth


def minimal_q(upper: Sequence[Sequence[int]], lower: Sequence[Sequence[int]]) -> int | None:
    """Least positive q with upper <= q * lower entrywise, or None if none exists."""
    q = 1
    for ru, rl in zip(upper, lower):
        for a, b in zip(ru, rl):
            if a == 0:
                continue
            if b == 0:
                return None
            q = max(q, -(-a // b))
    return q


def stabilization_depth(m: IrredundantMatrix) -> tuple[int, list[ZeroPattern]]:
    r = m.rows
    # depth <= 2r-1 means we never need powers beyond 2r; 2r+2 leaves room to
    # detect a violated bound instead of looping
    patterns = bool_alt_powers(m, 2 * r + 2)
    for n in range(2, 2 * r + 2):
        if patterns[n - 2] == patterns[n]:
            return n, patterns
    raise TheoremViolation(f"no stabilization of zero patterns up to M^{2 * r + 2}")


def depth(m: IrredundantMatrix) -> DepthReport:
    n, patterns = stabilization_depth(m)
    if n > 2 * m.rows - 1 and m.rows > 1:
        raise TheoremViolation(f"depth {n} exceeds 2r-1 = {2 * m.rows - 1}")
    if m.rows == 1 and n != 2:
        raise TheoremViolation("a one-row matrix must have depth 2")
    q = minimal_q(alt_power(m, n + 1).value, alt_power(m, n - 1).value)
    if q is None:
        raise TheoremViolation("zero patterns agree but no q certifies the inequality")
    depth_one = ZeroPattern.of(m.square).is_diagonal()
    return DepthReport(n, q, (patterns[n - 2], patterns[n]), depth_one)


def satisfies_depth_inequality(m: IrredundantMatrix, n: int, q: int) -> bool:
    """Direct check of M^(n+1) <= q M^(n-1) on exact integers."""
    if n < 2:
        raise ValueError("depth inequalities start at n = 2")
    hi = alt_power(m, n + 1).value
    lo = alt_power(m, n - 1).value
    return all(a <= q * b for ra, rb in zip(hi, lo) for a, b in zip(ra, rb))


# ---------------------------------------------------------------------------
# Constructors and theorem checks
# ---------------------------------------------------------------------------


def tensor(m: IrredundantMatrix, n: IrredundantMatrix) -> IrredundantMatrix:
    """Kronecker product in block form (m_ij N)."""
    rows = []
    for mrow in m.entries:
        for nrow in n.entries:
            rows.append(tuple(a * b for a in mrow for b in nrow))
    return IrredundantMatrix(tuple(rows))


def dynkin_chain(n: int) -> IrredundantMatrix:
    """Inclusion matrix of C^n into C x M_2(C)^(n-1) x C (type A Dynkin diagram)."""
    if n < 2:
        raise ValueError("dynkin_chain needs n >= 2")
    return IrredundantMatrix(
        tuple(tuple(1 if j in (i, i + 1) else 0 for j in range(n + 1)) for i in range(n))
    )


@dataclass(frozen=True)
class TransposeVerdict:
    """depth(M^t) <= depth(M) + 1, and M^t satisfies the depth-n inequality
    when n = depth(M) is even.

    The even case does not force equal depths: the transpose of the S_2 < S_3
    matrix has depth 4 while the matrix itself has depth 3.
    """

    depth: int
    transpose_depth: int

    @property
    def holds(self) -> bool:
        bound = self.depth if self.depth % 2 == 0 else self.depth + 1
        return self.transpose_depth <= bound

    @property
    def equal(self) -> bool:
        return self.depth == self.transpose_depth


def check_transpose_theorem(m: IrredundantMatrix) -> TransposeVerdict:
    n = depth(m).depth
    verdict = TransposeVerdict(n, depth(m.transpose()).depth)
    if not verdict.holds:
        raise TheoremViolation(
            f"depth(M)={verdict.depth} but depth(M^t)={verdict.transpose_depth}\n{m}"
        )
    if n % 2 == 0:
        mt = m.transpose()
        if minimal_q(alt_power(mt, n + 1).value, alt_power(mt, n - 1).value) is None:
            raise TheoremViolation(f"M^t fails the depth-{n} inequality\n{m}")
    return verdict


@dataclass(frozen=True)
class TowerVerdict:
    depth: int
    factors: int
    minimal_q: int


def check_tower_embedding(m: IrredundantMatrix) -> TowerVerdict:
    """With n = depth(M), P = M M^t M ... (n-1 factors) satisfies P P^t P <= q P."""
    n = depth(m).depth
    p = IrredundantMatrix(alternating_product(m, n - 1))
    q = minimal_q(matmul(p.square, p.entries), p.entries)
    if q is None:
        raise TheoremViolation(f"M^{n - 1} is not depth two for\n{m}")
    return TowerVerdict(n, n - 1, q)


@dataclass(frozen=True)
class TensorVerdict:
    left_depth: int
    right_depth: int
    tensor_depth: int


def check_tensor_bound(m: IrredundantMatrix, n: IrredundantMatrix) -> TensorVerdict:
    v = TensorVerdict(depth(m).depth, depth(n).depth, depth(tensor(m, n)).depth)
    if v.tensor_depth > max(v.left_depth, v.right_depth):
        raise TheoremViolation(f"depth(M (x) N) = {v.tensor_depth} > max({v.left_depth}, {v.right_depth})")
    return v


# ---------------------------------------------------------------------------
# Random sampling and permutation equivalence (test support)
# ---------------------------------------------------------------------------


def random_irredundant(
    rng: random.Random, max_rows: int = 5, max_cols: int = 5, max_entry: int = 3
) -> IrredundantMatrix:
    """Uniform entries in {0..max_entry}; redundant samples are rejected."""
    r = rng.randint(1, max_rows)
    s = rng.randint(1, max_cols)
    while True:
        rows = [[rng.randint(0, max_entry) for _ in range(s)] for _ in range(r)]
        if all(any(row) for row in rows) and all(any(row[j] for row in rows) for j in range(s)):
            return IrredundantMatrix.from_rows(rows)


def permutation_equivalence(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Find (row_order, col_order) with b[row_order[i]][col_order[j]] == a[i][j].

    Backtracks over row assignments, pruning with sorted row contents and with
    the multiset of partial columns.  Returns None when no pair exists.
    """
    a = _as_rows(a)
    b = _as_rows(b)
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return None
    r, s = len(a), len(a[0])
    sig_a = [tuple(sorted(row)) for row in a]
    sig_b = [tuple(sorted(row)) for row in b]
    if sorted(sig_a) != sorted(sig_b):
        return None
    if sorted(tuple(sorted(c)) for c in zip(*a)) != sorted(tuple(sorted(c)) for c in zip(*b)):
        return None

    assign: list[int] = []
    used = [False] * r

    def columns_match(k: int) -> bool:
        ca = sorted(tuple(a[i][j] for i in range(k)) for j in range(s))
        cb = sorted(tuple(b[assign[i]][j] for i in range(k)) for j in range(s))
        return ca == cb

    def search(i: int) -> bool:
        if i == r:
            return True
        for cand in range(r):
            if used[cand] or sig_b[cand] != sig_a[i]:
                continue
            used[cand] = True
            assign.append(cand)
            if columns_match(i + 1) and search(i + 1):
                return True
            assign.pop()
            used[cand] = False
        return False

    if not search(0):
        return None
    # columns: match full column vectors greedily (multisets are equal)
    pool: dict[tuple[int, ...], list[int]] = {}
    for j in range(s):
        pool.setdefault(tuple(b[assign[i]][j] for i in range(r)), []).append(j)
    col_order = []
    for j in range(s):
        col_order.append(pool[tuple(a[i][j] for i in range(r))].pop(0))
    return tuple(assign), tuple(col_order)


def permutation_equivalent(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    return permutation_equivalence(a, b) is not None


def support_equivalent(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Permutation equivalence of the 0/1 supports."""
    return permutation_equivalent(
        [[1 if x else 0 for x in row] for row in a], [[1 if x else 0 for x in row] for row in b]
    )
