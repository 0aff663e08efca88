import io
import json
import subprocess
import sys
from importlib import resources

import pytest

from subdepth import cli, chartab
from subdepth.errors import TheoremViolation

MATS = resources.files("subdepth.data.matrices")
D8 = str(MATS.joinpath("d8s4.mat"))
S2S3 = str(MATS.joinpath("s2s3.mat"))
D8_GENS = ["--degree", "4", "--group", "(1,2),(1,2,3,4)", "--subgroup", "(1,2,3,4),(1,4)(2,3)"]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_matrix_depth_default_q():
    assert run("matrix", "depth", D8) == (0, "depth = 4, q = 4 satisfies S^2 M <= 4 S M\n", "")


def test_matrix_depth_given_q():
    code, out, _ = run("matrix", "depth", D8, "--q", "5")
    assert out == "depth = 4, q = 5 satisfies S^2 M <= 5 S M\n"
    code, out, _ = run("matrix", "depth", D8, "--q", "3")
    assert code == 0 and "does not satisfy" in out


def test_matrix_depth_json_round_trips():
    code, out, _ = run("matrix", "depth", S2S3, "--json")
    rec = json.loads(out)
    assert code == 0 and rec["depth"] == 3 and rec["odd_depth"] == 3
    assert cli.to_json(rec) == out


def test_malformed_matrix_exit_1(tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("2 2\n1 0\n")
    code, out, err = run("matrix", "depth", str(bad))
    assert code == 1 and "MalformedFile" in err and out == ""


def test_missing_file_exit_1():
    code, _, err = run("matrix", "depth", "/nonexistent.mat")
    assert code == 1 and "cannot read" in err


def test_usage_error_exit_1():
    assert run("matrix", "frobnicate")[0] == 1
    assert run()[0] == 1


def test_internal_failure_exit_2(monkeypatch):
    def boom(*a, **k):
        raise TheoremViolation("forced")

    monkeypatch.setattr(cli, "depth", boom)
    code, _, err = run("matrix", "depth", D8)
    assert code == 2 and "TheoremViolation" in err


def test_matrix_power():
    code, out, _ = run("matrix", "power", S2S3, "-k", "3")
    assert out == "M^3 = S M:\n2 1 3\n1 2 3\n"


@pytest.mark.parametrize("k, name", [(1, "M"), (2, "S"), (3, "S M"), (4, "S^2"), (5, "S^2 M")])
def test_power_names(k, name):
    assert cli.power_name(k) == name


def test_matrix_tensor(tmp_path):
    out_file = tmp_path / "t.mat"
    code, out, _ = run("matrix", "tensor", S2S3, S2S3, "-o", str(out_file))
    assert code == 0 and "4x9" in out
    assert out_file.read_text().splitlines()[1] == "4 9"


def test_matrix_props():
    code, out, _ = run("matrix", "props", S2S3)
    assert code == 0 and "depth(M^t) = 4 <= 4" in out
    rec = json.loads(run("matrix", "props", S2S3, "--json")[1])
    assert rec["transpose"] == {"depth": 3, "holds": True, "transpose_depth": 4}


def test_graph_export(tmp_path):
    code, out, _ = run("graph", "export", D8)
    assert code == 0 and out.startswith('graph "d8s4" {')
    run("graph", "export", D8, "-o", str(tmp_path / "g.dot"))
    assert (tmp_path / "g.dot").read_text() == out


def test_group_analyze_d8():
    code, out, _ = run("group", "analyze", *D8_GENS)
    assert code == 0
    assert "depth = 4" in out and "core order 4" in out and "m = 2" in out
    assert "bounds: core 4, eigenvalue 5, normalizer 6" in out


def test_group_analyze_json_round_trip():
    code, out, _ = run("group", "analyze", "--pair", "S3<S4", "--json")
    rec = json.loads(out)
    assert rec["depth"] == 5 and rec["fusion_injective"] and rec["bounds"]["eigenvalue"] == 5
    assert [e["value"] for e in rec["eigenvalues"]] == ["4", "2", "1"]
    assert cli.to_json(json.loads(out)) == out


def test_group_analyze_conjugator_and_dot(tmp_path):
    dot = tmp_path / "d12.dot"
    code, out, _ = run("group", "analyze", "--pair", "D12<S6", "--conjugator", "(2,4)(5,6)", "--dot", str(dot))
    assert code == 0 and "depth = 3" in out
    assert "|H cap H^g| = 1 for g = (2,4)(5,6)" in out
    assert dot.read_text().startswith('graph "D12 < S6"')


def test_group_analyze_errors():
    assert run("group", "analyze", "--degree", "4", "--group", "(1,2", "--subgroup", "(1,2)")[0] == 1
    assert run("group", "analyze", "--degree", "4", "--group", "(1,2,3)", "--subgroup", "(1,2)")[0] == 1
    assert run("group", "analyze", "--pair", "nope")[0] == 1
    assert run("group", "analyze", "--degree", "4")[0] == 1


def test_group_analyze_missing_table():
    code, _, err = run("group", "analyze", "--degree", "6", "--group", "(1,2),(3,4),(5,6)", "--subgroup", "(1,2)")
    assert code == 1 and "TablesUnavailable" in err and "group" in err


def test_group_analyze_with_tables_flag(tmp_path):
    (tmp_path / "c3.tbl").write_text(chartab.format_table(chartab.table_generate("cyclic", 3)))
    code, out, _ = run("group", "analyze", "--pair", "A3<S3", "--tables", str(tmp_path))
    assert code == 0 and "depth = 2" in out


def test_group_list():
    code, out, _ = run("group", "list")
    assert code == 0 and "D8<S4" in out


def test_family_depths():
    assert run("sym", "depth", "5")[1] == "9 (= 2n−1), matrix oracle: agree\n"
    assert run("alt", "depth", "6")[1] == "7 (= 2(n−⌈√n⌉)+1), matrix oracle: agree\n"
    assert "skipped" in run("sym", "depth", "12")[1]


def test_family_matrices(tmp_path):
    f = tmp_path / "s3.mat"
    assert run("sym", "matrix", "3", "-o", str(f))[0] == 0
    assert "3 5" in f.read_text().splitlines()
    assert run("alt", "matrix", "4")[1].count("\n") > 4
    assert run("sym", "matrix", "9")[0] == 1


def test_chartab_gen(tmp_path):
    f = tmp_path / "d10.tbl"
    assert run("chartab", "gen", "dihedral", "5", "-o", str(f))[0] == 0
    t = chartab.load_table(f)
    assert t.label == "D10" and sorted(t.degrees) == [1, 1, 2, 2]
    assert run("chartab", "gen", "symmetric", "9")[0] == 1


def test_dump_assets(tmp_path):
    code, out, _ = run("dump-assets")
    assert "matrices/d8s4.mat" in out and "tables/A6.tbl" in out
    run("dump-assets", "-o", str(tmp_path))
    assert (tmp_path / "matrices" / "d10s5.mat").read_text() == MATS.joinpath("d10s5.mat").read_text()


def test_output_is_byte_stable():
    a = run("group", "analyze", "--pair", "A4<A5", "--json")
    b = run("group", "analyze", "--pair", "A4<A5", "--json")
    assert a == b


def test_reproduce_paper():
    code, out, _ = run("reproduce-paper")
    assert code == 0 and out.count("[PASS]") == 12 and "12/12" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subdepth", "sym", "depth", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("5 ")
