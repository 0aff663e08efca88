"""Regenerate the bundled character tables and matrices under src/subdepth/data.

    python3 tools/build_assets.py

Symmetric, dihedral and cyclic tables come from ``table_generate``.  Tables of
A_n are derived from S_n: characters of non-self-conjugate partitions
restrict irreducibly, and each self-conjugate lam splits into two whose
values differ only on the two A_n-classes of cycle type h, the diagonal hook
lengths of lam, where they are (e +- sqrt(e * prod h)) / 2 with
e = (-1)^((n - len h)/2).  Everything written is re-parsed and validated.
"""

from __future__ import annotations

import cmath
from math import factorial, prod
from pathlib import Path

import numpy as np

from subdepth import chartab, perm
from subdepth.chartab import CharacterTable, centralizer_order, cycle_type_rep, symmetric_character
from subdepth.intmatrix import IrredundantMatrix
from subdepth.young import Partition, partitions

ROOT = Path(__file__).resolve().parents[1]
TABLES = ROOT / "src" / "subdepth" / "data" / "tables"
MATRICES = ROOT / "src" / "subdepth" / "data" / "matrices"


def diagonal_hooks(lam: Partition) -> tuple[int, ...]:
    return tuple(2 * (p - i) + 1 for i, p in enumerate(lam, 1) if p >= i)


def alternating_table(n: int) -> CharacterTable:
    swap = perm.parse_perm("(1,2)", n)
    columns = []  # (cycle type, sign or 0, representative, size)
    for rho in sorted(partitions(n)):
        if (n - len(rho)) % 2:
            continue
        size = factorial(n) // centralizer_order(rho)
        rep = cycle_type_rep(rho, n)
        if len(set(rho)) == len(rho) and all(p % 2 for p in rho):
            columns.append((rho, 1, rep, size // 2))
            columns.append((rho, -1, swap * rep * swap, size // 2))
        else:
            columns.append((rho, 0, rep, size))
    rows = []
    for lam in partitions(n):
        conj = lam.conjugate()
        base = [symmetric_character(tuple(lam), tuple(rho)) for rho, _, _, _ in columns]
        if lam > conj:
            rows.append(base)
        elif lam == conj:
            h = diagonal_hooks(lam)
            eps = (-1) ** ((n - len(h)) // 2)
            root = cmath.sqrt(eps * prod(h))
            for s in (1, -1):
                row = []
                for (rho, sign, _, _), v in zip(columns, base):
                    if tuple(rho) == h:
                        row.append((eps + s * sign * root) / 2)
                    else:
                        row.append(v / 2)
                rows.append(row)
    return CharacterTable(
        f"A{n}",
        tuple(c[3] for c in columns),
        np.array(rows, dtype=complex),
        tuple(c[2] for c in columns),
    )


def klein_table() -> CharacterTable:
    reps = tuple(perm.parse_perm(w, 4) for w in ("()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"))
    vals = [[1, 1, 1, 1]] + [[1] + [1 if j == i else -1 for j in range(3)] for i in range(3)]
    return CharacterTable("V4", (1, 1, 1, 1), np.array(vals, dtype=complex), reps)


def all_tables() -> list[CharacterTable]:
    out = [chartab.table_generate("symmetric", n) for n in range(2, 7)]
    out += [chartab.table_generate("dihedral", n) for n in (4, 5, 6)]
    out += [alternating_table(n) for n in (4, 5, 6)]
    out += [chartab.table_generate("cyclic", n) for n in range(2, 7)]
    out.append(klein_table())
    return out


MATRIX_ASSETS = {
    "d8s4.mat": (
        "inclusion matrix of D8 < S4",
        [[1, 0, 1, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]],
    ),
    "d10s5.mat": (
        "inclusion matrix of D10 < S5, a = (1,2,3,4,5), b = (1,5)(2,4)",
        [
            [1, 0, 1, 0, 1, 0, 1],
            [0, 0, 0, 2, 0, 0, 0],
            [0, 1, 1, 1, 1, 1, 0],
            [0, 1, 1, 1, 1, 1, 0],
        ],
    ),
    "s2s3.mat": ("inclusion matrix of S2 < S3", [[1, 0, 1], [0, 1, 1]]),
}


def main() -> None:
    TABLES.mkdir(parents=True, exist_ok=True)
    MATRICES.mkdir(parents=True, exist_ok=True)
    for t in all_tables():
        text = chartab.format_table(t)
        chartab.parse_table(text)  # validates
        (TABLES / f"{t.label}.tbl").write_text(text)
        print(f"wrote {t.label}.tbl  residual {chartab.residuals(t).max:.2e}")
    for name, (comment, rows) in MATRIX_ASSETS.items():
        (MATRICES / name).write_text(IrredundantMatrix.from_rows(rows).to_text(comment))
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
