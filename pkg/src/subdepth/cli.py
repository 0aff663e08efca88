"""Command-line interface.

    subdepth matrix depth FILE [--q Q] [--json]
    subdepth matrix power FILE -k K [--json]
    subdepth matrix tensor A B -o OUT
    subdepth matrix props FILE [--with FILE2] [--json]
    subdepth graph export FILE [-o OUT] [--name NAME]
    subdepth group analyze (--pair NAME | --degree N --group GENS --subgroup GENS)
                           [--tables DIR] [--dot OUT] [--conjugator G] [--json]
    subdepth group list
    subdepth sym depth N | sym matrix N -o FILE
    subdepth alt depth N | alt matrix N -o FILE
    subdepth chartab gen KIND N [-o FILE]
    subdepth reproduce-paper
    subdepth dump-assets [-o DIR]

Exit status: 0 on success, 1 for bad input, 2 when an internal consistency
check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from . import acceptance, bratteli, catalog, chartab, perm, young
from .errors import InputError, InternalCheckFailure, UnsupportedSize
from .intmatrix import (
    DepthReport,
    IrredundantMatrix,
    alt_power,
    check_tensor_bound,
    check_tower_embedding,
    check_transpose_theorem,
    depth,
    parse_matrix,
    satisfies_depth_inequality,
    tensor,
)

MATRIX_CAP = 8  # family matrices are built and verified up to this n


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for failed checks here
    def error(self, message: str):
        raise UsageError(message)


def to_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def power_name(k: int) -> str:
    """Alternating power M^k written with S = M M^t: M, S, S M, S^2, ..."""
    if k == 0:
        return "I"
    j = k // 2
    s = "" if j == 0 else ("S" if j == 1 else f"S^{j}")
    if k % 2:
        return f"{s} M".strip()
    return s


def inequality_text(n: int, q: int) -> str:
    return f"{power_name(n + 1)} <= {q} {power_name(n - 1)}"


def _read_matrix(path: str) -> IrredundantMatrix:
    try:
        return parse_matrix(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def matrix_record(m: IrredundantMatrix, rep: DepthReport | None = None) -> dict:
    rep = rep or depth(m)
    g = bratteli.build_graph(m)
    bratteli.graph_depth(g)  # cross-check against the matrix oracle
    return {
        "shape": list(m.shape),
        "matrix": [list(r) for r in m.entries],
        "depth": rep.depth,
        "depth_one": rep.depth_one,
        "minimal_q": rep.minimal_q,
        "odd_depth": bratteli.odd_depth(g),
        "even_depth": bratteli.even_depth(g),
        "classes": bratteli.equiv_classes(g).count,
    }


# ---------------------------------------------------------------------------
# matrix
# ---------------------------------------------------------------------------


def cmd_matrix_depth(args, out) -> int:
    m = _read_matrix(args.file)
    rep = depth(m)
    q = rep.minimal_q if args.q is None else args.q
    holds = satisfies_depth_inequality(m, rep.depth, q)
    if args.json:
        rec = {"input": args.file, **matrix_record(m, rep), "q": q, "q_holds": holds}
        out.write(to_json(rec))
    else:
        verb = "satisfies" if holds else "does not satisfy"
        line = f"depth = {rep.depth}, q = {q} {verb} {inequality_text(rep.depth, q)}"
        if rep.depth_one:
            line += " (depth one: S is diagonal)"
        out.write(line + "\n")
    return 0


def cmd_matrix_power(args, out) -> int:
    m = _read_matrix(args.file)
    p = alt_power(m, args.k)
    if args.json:
        out.write(to_json({"input": args.file, "k": args.k, "power": [list(r) for r in p.value]}))
    else:
        out.write(f"M^{args.k} = {power_name(args.k)}:\n")
        out.write(str(IrredundantMatrix(p.value)) + "\n")
    return 0


def cmd_matrix_tensor(args, out) -> int:
    a, b = _read_matrix(args.a), _read_matrix(args.b)
    t = tensor(a, b)
    _write(args.output, t.to_text(f"tensor product of {args.a} and {args.b}"), out)
    v = check_tensor_bound(a, b)
    if args.output not in (None, "-"):
        out.write(f"wrote {args.output}: {t.rows}x{t.cols}, depth {v.tensor_depth} <= max({v.left_depth}, {v.right_depth})\n")
    return 0


def cmd_matrix_props(args, out) -> int:
    m = _read_matrix(args.file)
    other = _read_matrix(args.with_file) if args.with_file else m
    tr = check_transpose_theorem(m)
    tw = check_tower_embedding(m)
    te = check_tensor_bound(m, other)
    rec = {
        "input": args.file,
        **matrix_record(m),
        "transpose": {"depth": tr.depth, "transpose_depth": tr.transpose_depth, "holds": tr.holds},
        "tower": {"factors": tw.factors, "minimal_q": tw.minimal_q},
        "tensor": {"left": te.left_depth, "right": te.right_depth, "tensor": te.tensor_depth},
    }
    if args.json:
        out.write(to_json(rec))
        return 0
    bound = tr.depth if tr.depth % 2 == 0 else tr.depth + 1
    out.write(f"depth = {rec['depth']} (odd {rec['odd_depth']}, even {rec['even_depth']}), minimal q = {rec['minimal_q']}\n")
    out.write(f"transpose: depth(M^t) = {tr.transpose_depth} <= {bound}: ok\n")
    out.write(f"tower: P = M^{tw.factors} satisfies P P^t P <= {tw.minimal_q} P: ok\n")
    out.write(f"tensor: depth = {te.tensor_depth} <= max({te.left_depth}, {te.right_depth}): ok\n")
    return 0


def cmd_graph_export(args, out) -> int:
    m = _read_matrix(args.file)
    dot = bratteli.export_dot(bratteli.build_graph(m), args.name or Path(args.file).stem)
    _write(args.output, dot, out)
    return 0


# ---------------------------------------------------------------------------
# group
# ---------------------------------------------------------------------------


def _fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def group_record(g: perm.PermGroup, h: perm.PermGroup, a: chartab.GroupAnalysis, inputs: dict) -> dict:
    b = a.bounds
    ev = b.eigenvalues
    return {
        "input": inputs,
        "group_order": g.order,
        "subgroup_order": h.order,
        "tables": {"group": a.group_label, "subgroup": a.subgroup_label},
        "class_counts": {"group": a.group_classes, "subgroup": a.subgroup_classes},
        "fusion": list(a.fusion),
        "normal": b.is_normal,
        "core_order": b.core_order,
        "core_central": b.core_central,
        "core_classes": a.core_classes,
        "normalizer_index": b.normalizer_index,
        "min_conjugates": {
            "m": b.min_conjugates.m,
            "witness": [str(p) for p in b.min_conjugates.conjugators],
            "exact": b.min_conjugates.exact,
        },
        "eigenvalues": [
            {"value": _fraction_text(v), "multiplicity": k} for v, k in ev.with_multiplicity()
        ],
        "numeric_eigenvalues": [round(x, 12) + 0.0 for x in a.numeric_eigenvalues],
        "fusion_injective": ev.fusion_injective,
        "bounds": b.bounds,
        "matrix": [list(r) for r in a.matrix.entries],
        "depth": a.depth,
        "depth_one": a.report.depth_one,
        "minimal_q": a.report.minimal_q,
        "odd_depth": a.odd_depth,
        "even_depth": a.even_depth,
        "classes": a.components.count,
    }


def _group_text(rec: dict) -> str:
    lines = [
        f"G: order {rec['group_order']} (table {rec['tables']['group']}, {rec['class_counts']['group']} classes)",
        f"H: order {rec['subgroup_order']} (table {rec['tables']['subgroup']}, {rec['class_counts']['subgroup']} classes)",
        f"normal: {'yes' if rec['normal'] else 'no'}; core order {rec['core_order']}"
        + (" (central)" if rec["core_central"] else "")
        + f"; [G:N_G(H)] = {rec['normalizer_index']}",
    ]
    mc = rec["min_conjugates"]
    lines.append(
        f"m = {mc['m']} conjugates meet in the core"
        + ("" if mc["exact"] else " (greedy upper bound)")
        + f", conjugators {' '.join(mc['witness'])}"
    )
    ev = ", ".join(
        e["value"] + (f" (x{e['multiplicity']})" if e["multiplicity"] > 1 else "") for e in rec["eigenvalues"]
    )
    lines.append(f"eigenvalues of S: {ev}; fusion {'injective' if rec['fusion_injective'] else 'not injective'}")
    b = rec["bounds"]
    lines.append(f"bounds: core {b['core']}, eigenvalue {b['eigenvalue']}, normalizer {b['normalizer']}")
    lines.append("inclusion matrix:")
    lines.append(str(IrredundantMatrix.from_rows(rec["matrix"])))
    depth_line = f"depth = {rec['depth']}"
    if rec["depth_one"]:
        depth_line += " (depth one)"
    depth_line += f", q = {rec['minimal_q']}; graph: odd {rec['odd_depth']}, even {rec['even_depth']}; {rec['classes']} class(es)"
    lines.append(depth_line)
    if "conjugator" in rec:
        c = rec["conjugator"]
        lines.append(f"|H cap H^g| = {c['intersection_order']} for g = {c['g']}")
    return "\n".join(lines) + "\n"


def cmd_group_analyze(args, out) -> int:
    if args.pair:
        spec = catalog.pair(args.pair)
        degree, gtext, htext = spec.degree, spec.group, spec.subgroup
    else:
        if not (args.degree and args.group and args.subgroup):
            raise UsageError("give --pair, or all of --degree, --group and --subgroup")
        degree, gtext, htext = args.degree, args.group, args.subgroup
    g = perm.generate(perm.parse_generators(gtext, degree), degree)
    h = perm.generate(perm.parse_generators(htext, degree), degree)
    source = chartab.TableSource.from_env(args.tables)
    a = chartab.group_depth(g, h, source, limit=args.limit)
    rec = group_record(g, h, a, {"degree": degree, "group": gtext, "subgroup": htext})
    if args.conjugator:
        x = perm.parse_perm(args.conjugator, degree)
        if x not in g:
            raise UsageError(f"{args.conjugator} is not in the group")
        inter = h.element_set & perm.conjugate_set(perm.invert(x.img), h.elements)
        rec["conjugator"] = {"g": str(x), "intersection_order": len(inter)}
    if args.dot:
        graph = bratteli.build_graph(a.matrix)
        Path(args.dot).write_text(bratteli.export_dot(graph, f"{a.subgroup_label} < {a.group_label}"))
    out.write(to_json(rec) if args.json else _group_text(rec))
    return 0


def cmd_group_list(args, out) -> int:
    for p in catalog.PAIRS:
        out.write(f"{p.name:8} degree {p.degree}  G = {p.group}  H = {p.subgroup}" + (f"  ({p.note})" if p.note else "") + "\n")
    return 0


# ---------------------------------------------------------------------------
# families, tables, reproduction
# ---------------------------------------------------------------------------


def _family_line(value: int, formula: str, check: young.FamilyCheck | None) -> str:
    if check is None:
        oracle = f"skipped (n > {MATRIX_CAP})"
    else:
        oracle = "agree" if check.agree else f"DISAGREE (matrix depth {check.matrix_depth})"
    return f"{value} (= {formula}), matrix oracle: {oracle}\n"


def cmd_sym_depth(args, out) -> int:
    n = args.n
    check = young.verify_sym_depth(n) if n <= MATRIX_CAP else None
    value = young.sym_depth(n)
    out.write(_family_line(value, "2n−1" if n > 1 else "2", check))
    return 0 if check is None or check.agree else 2


def cmd_alt_depth(args, out) -> int:
    n = args.n
    check = young.verify_alt_depth(n) if 3 <= n <= MATRIX_CAP else None
    value = young.alt_depth(n)
    out.write(_family_line(value, "2(n−⌈√n⌉)+1" if n > 2 else "2", check))
    return 0 if check is None or check.agree else 2


def _family_matrix(kind: str, args, out) -> int:
    if args.n > MATRIX_CAP:
        raise UnsupportedSize(f"family matrices are limited to n <= {MATRIX_CAP}")
    if kind == "sym":
        g = young.sym_branch_graph(args.n)
        comment = f"S_{args.n} < S_{args.n + 1}: rows partitions of {args.n}, columns of {args.n + 1}"
    else:
        if args.n < 3:
            raise UnsupportedSize("alternating matrices need n >= 3")
        g = young.alt_branch_graph(args.n)
        comment = f"zero pattern of A_{args.n} < A_{args.n + 1}"
    comment += "\nrows: " + " ".join(str(v) for v in g.lower) + "\ncolumns: " + " ".join(str(v) for v in g.upper)
    _write(args.output, g.matrix().to_text(comment), out)
    return 0


def cmd_chartab_gen(args, out) -> int:
    t = chartab.table_generate(args.kind, args.n)
    _write(args.output, chartab.format_table(t), out)
    return 0


def cmd_reproduce(args, out) -> int:
    results = acceptance.run_all()
    for r in results:
        out.write(r.line() + "\n")
    passed = sum(r.passed for r in results)
    out.write(f"{passed}/{len(results)} checks passed\n")
    return 0 if passed == len(results) else 2


def _asset_files() -> list[tuple[str, str]]:
    data = resources.files("subdepth.data")
    found = []
    for sub, suffix in (("matrices", ".mat"), ("tables", ".tbl")):
        for f in sorted(data.joinpath(sub).iterdir(), key=lambda p: p.name):
            if f.name.endswith(suffix):
                found.append((f"{sub}/{f.name}", f.read_text()))
    return found


def cmd_dump_assets(args, out) -> int:
    files = _asset_files()
    if args.output is None:
        for name, _ in files:
            out.write(name + "\n")
        return 0
    root = Path(args.output)
    for name, text in files:
        path = root / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    out.write(f"wrote {len(files)} files to {root}\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subdepth", description="Depth of subgroups and algebra inclusions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    mat = sub.add_parser("matrix", help="inclusion matrix files").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    d = mat.add_parser("depth", help="depth and minimal q")
    d.add_argument("file")
    d.add_argument("--q", type=int, help="check this q instead of the minimal one")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_matrix_depth)
    pw = mat.add_parser("power", help="alternating power M M^t M ...")
    pw.add_argument("file")
    pw.add_argument("-k", type=int, required=True)
    pw.add_argument("--json", action="store_true")
    pw.set_defaults(func=cmd_matrix_power)
    te = mat.add_parser("tensor", help="Kronecker product of two matrices")
    te.add_argument("a")
    te.add_argument("b")
    te.add_argument("-o", "--output", required=True)
    te.set_defaults(func=cmd_matrix_tensor)
    pr = mat.add_parser("props", help="transpose, tower and tensor checks")
    pr.add_argument("file")
    pr.add_argument("--with", dest="with_file", help="second matrix for the tensor check (default: itself)")
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(func=cmd_matrix_props)

    gr = sub.add_parser("graph", help="Bratteli diagrams").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    ex = gr.add_parser("export", help="GraphViz DOT of a matrix")
    ex.add_argument("file")
    ex.add_argument("-o", "--output")
    ex.add_argument("--name")
    ex.set_defaults(func=cmd_graph_export)

    grp = sub.add_parser("group", help="permutation group pairs").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    an = grp.add_parser("analyze", help="depth, bounds and eigenvalues of H < G")
    an.add_argument("--pair", help="a named pair from 'group list'")
    an.add_argument("--degree", type=int)
    an.add_argument("--group", help="generators, e.g. '(1,2),(1,2,3,4)'")
    an.add_argument("--subgroup")
    an.add_argument("--tables", help="directory of .tbl files (default $SUBDEPTH_TABLE_DIR)")
    an.add_argument("--dot", help="write the Bratteli diagram here")
    an.add_argument("--conjugator", help="also report |H cap H^g| for this g")
    an.add_argument("--limit", type=int, default=8, help="exhaustive search up to this many conjugates")
    an.add_argument("--json", action="store_true")
    an.set_defaults(func=cmd_group_analyze)
    grp.add_parser("list", help="named pairs").set_defaults(func=cmd_group_list)

    for kind, depth_fn in (("sym", cmd_sym_depth), ("alt", cmd_alt_depth)):
        fam = sub.add_parser(kind, help=f"{'symmetric' if kind == 'sym' else 'alternating'} group family")
        fs = fam.add_subparsers(dest="sub", required=True, parser_class=_Parser)
        fd = fs.add_parser("depth")
        fd.add_argument("n", type=int)
        fd.set_defaults(func=depth_fn)
        fm = fs.add_parser("matrix")
        fm.add_argument("n", type=int)
        fm.add_argument("-o", "--output")
        fm.set_defaults(func=lambda a, o, kind=kind: _family_matrix(kind, a, o))

    ct = sub.add_parser("chartab", help="character tables").add_subparsers(dest="sub", required=True, parser_class=_Parser)
    gen = ct.add_parser("gen", help="generate a table (dihedral N has order 2N)")
    gen.add_argument("kind", choices=["cyclic", "dihedral", "symmetric"])
    gen.add_argument("n", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_chartab_gen)

    sub.add_parser("reproduce-paper", help="run the acceptance table").set_defaults(func=cmd_reproduce)
    da = sub.add_parser("dump-assets", help="list or export the bundled matrices and tables")
    da.add_argument("-o", "--output", help="directory to write into")
    da.set_defaults(func=cmd_dump_assets)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except InternalCheckFailure as exc:
        err.write(f"internal check failed: {type(exc).__name__}: {exc}\n")
        return 2
    except (InputError, KeyError, ValueError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
