import json
import re
import subprocess
import sys

import pytest

from shiftlab import cli
from shiftlab.errors import ConsistencyError
from shiftlab.formats import example_path
from shiftlab.golden import compare_goldens, golden_dir, render_all
from shiftlab.simplicial import SimplicialComplex, alexander_dual

import worked_examples

EX = str(example_path("example_ex.json"))
EX2 = str(example_path("example_ex2.ideal"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


# -- commands on the example complex -------------------------------------------------

def test_shift(capsys):
    code, out, _ = run(capsys, "shift", EX)
    assert code == 0
    data = json.loads(out.splitlines()[0])
    assert {tuple(f) for f in data["facets"]} == set(worked_examples.EX_SHIFTED_FACETS)
    assert "16 facets" in out


def test_btriangle_flavors(capsys):
    _, out, _ = run(capsys, "btriangle", EX)
    assert out.splitlines()[-1].split("|")[1].split() == ["1", "4", "8", "1"]
    _, out, _ = run(capsys, "btriangle", EX, "--flavor", "kalai")
    assert out.splitlines()[-1].split("|")[1].split() == ["1", "4", "10", "1"]
    code, out, _ = run(capsys, "btriangle", EX, "--flavor", "exterior")
    assert code == 0 and out.splitlines()[-2].split("|")[1].split() == ["0", "0", "2"]


def test_betti_diagram_matches_example(capsys):
    _, out, _ = run(capsys, "betti", EX)
    lines = out.splitlines()
    assert lines[1].split()[1:] == [str(v) for v in worked_examples.EX_BETTI_TOTALS]
    for r, row in worked_examples.EX_BETTI_ROWS.items():
        cells = lines[2 + r].split()[1:]
        assert cells == [str(v) if v else "." for v in row]


def test_betti_formula_needs_shifted_input(capsys, tmp_path):
    code, _, err = run(capsys, "betti", EX, "--method", "sss-formula")
    assert code == 1 and "shifted" in err
    shifted = write(tmp_path, "d.json", json.dumps({"n": 7, "facets": [list(f) for f in worked_examples.EX_SHIFTED_FACETS]}))
    code, a, _ = run(capsys, "betti", shifted, "--method", "sss-formula")
    _, b, _ = run(capsys, "betti", shifted)
    assert code == 0 and a == b


def test_extremal(capsys):
    _, out, _ = run(capsys, "extremal", EX)
    got = {(int(i), int(j)): int(v) for i, j, v in re.findall(r"beta_\{(\d+),(\d+)\}\(I\) = (\d+)", out)}
    assert got == worked_examples.EX_EXTREMAL


def test_stdpairs_rows_match_the_table(capsys):
    _, out, _ = run(capsys, "stdpairs", EX)
    rows = out.splitlines()[2:]
    assert len(rows) == 16
    names = worked_examples.EX_NAMES
    got = set()
    for row in rows:
        pair, image, facet = [c.strip() for c in row.split("|")]
        coset = pair.split("N^")[0].strip().replace("*", "") or "1"
        got.add((worked_examples.word(coset, names), facet))
    want = {(worked_examples.word(c, names), "N^{" + ",".join(map(str, sorted(f))) + "}")
            for _, c, _, _, _, f in worked_examples.EX_PAIR_TABLE}
    assert got == want


def test_degrees(capsys):
    _, out, _ = run(capsys, "degrees", EX)
    d = json.loads(out)
    assert d["degree"] == 14 and d["arithdeg"] == 16
    assert d["multiplicities"] == {"3": 14, "2": 2}


# -- the example ideal --------------------------------------------------------------

def test_gin_of_ex2(capsys):
    code, out, _ = run(capsys, "gin", EX2)
    assert code == 0
    lines = out.splitlines()
    gens = [l.strip().replace("*", "") for l in lines[1:7]]
    assert {worked_examples.word(g, worked_examples.EX2_NAMES) for g in gens} == worked_examples.EX2_GIN
    assert "certified: yes" in out


def test_btriangle_of_ex2(capsys):
    _, out, _ = run(capsys, "btriangle", EX2)
    rows = [l.split("|")[1].split() for l in out.splitlines()[2:]]
    assert [sum(map(int, r)) for r in rows] == [9, 5, 2]


def test_rational_and_prime_options(capsys):
    code, a, _ = run(capsys, "--rational", "gin", EX2)
    assert code == 0 and "certified: yes" in a
    code, _, err = run(capsys, "--prime", "3", "gin", EX2)
    assert code == 1 and "characteristic" in err


# -- exit codes ---------------------------------------------------------------------

def test_parse_errors_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "shift", write(tmp_path, "bad.json", '{"n": 3, "facets": [[1,2],,]}'))
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "gin", write(tmp_path, "bad.ideal", "vars: x,y\nx*y\nx^^2\n"))
    assert code == 2 and "line 3" in err


def test_contract_errors_exit_1(capsys, tmp_path):
    code, _, _ = run(capsys, "shift", write(tmp_path, "v.json", '{"n": 3, "facets": [[1, 4]]}'))
    assert code == 1
    assert run(capsys, "shift", str(tmp_path / "missing.json"))[0] == 1
    assert run(capsys, "--attempts", "1", "shift", EX)[0] == 1
    assert run(capsys, "shift", EX2)[0] == 1


def test_uncertified_exits_3(capsys, tmp_path):
    K = alexander_dual(SimplicialComplex(7, [[1, 2, 3], [2, 3, 7], [3, 4, 5], [6]]))
    path = write(tmp_path, "k.json", K.to_json())
    code, out, _ = run(capsys, "gin", path)
    assert code == 3 and "certified: NO" in out and "UNCERTIFIED" in out
    assert run(capsys, "shift", path)[0] == 3
    assert run(capsys, "--seed", "1", "gin", path)[0] == 0


def test_consistency_failure_exits_4(capsys, monkeypatch):
    def boom(*a, **k):
        raise ConsistencyError("forced")

    monkeypatch.setattr(cli, "render_extremal", boom)
    code, _, err = run(capsys, "extremal", EX)
    assert code == 4 and "forced" in err


def test_verify_and_scan(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "p-properties", "--n", "3")
    assert code == 0 and "FAIL" not in out
    js = tmp_path / "scan.json"
    code, out, _ = run(capsys, "scan", "--n", "3", "--exhaustive", "--json", str(js))
    assert code == 0
    rep = json.loads(js.read_text())
    assert rep["complexes"] == 19 and rep["violations"] == 0


def test_scan_needs_a_family():
    with pytest.raises(SystemExit):
        cli.main(["scan", "--n", "3"])


# -- golden files and determinism ------------------------------------------------------

def test_goldens_match():
    assert all(compare_goldens().values())
    assert len(list(golden_dir().iterdir())) == 15


def test_golden_btriangle_is_the_transcribed_triangle():
    text = (golden_dir() / "ex_btriangle.txt").read_text()
    rows = [tuple(int(x) for x in l.split("|")[1].split()) for l in text.splitlines()[2:]]
    assert rows == worked_examples.EX_B_TRIANGLE


def test_rendering_is_deterministic():
    assert render_all() == render_all()


def test_module_entry_point_bytes():
    cmd = [sys.executable, "-m", "shiftlab", "btriangle", EX]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"\r\n" not in a
    assert a.decode() == (golden_dir() / "ex_btriangle.txt").read_text()
