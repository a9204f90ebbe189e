import io
import json
import subprocess
import sys

import pytest

from ehrhart3.cli import main


@pytest.fixture
def cli(monkeypatch, capsys):
    """Run ``main(argv)`` with ``stdin`` text; returns (exit code, stdout, stderr)."""

    def _run(argv, stdin=""):
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = main(argv)
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def coeffs(doc):
    return tuple(f'{doc["coefficients"][k]["num"]}/{doc["coefficients"][k]["den"]}' for k in ("c0", "c1", "c2", "c3"))


def gen(cli, *args):
    code, out, _ = cli(["gen", *args])
    assert code == 0
    return out


def test_gen_families(cli):
    assert json.loads(gen(cli, "tetra", "1", "1", "1")) == {
        "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    }
    doc = json.loads(gen(cli, "prism", "1", "0", "1"))
    assert doc["vertices"][3] == [0, 0, 1]
    assert len(doc["vertices"]) == 6
    doc = json.loads(gen(cli, "cube", "2"))
    assert sorted(map(tuple, doc["vertices"])) == sorted(
        (x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)
    )


@pytest.mark.parametrize(
    "argv", [["tetra", "2", "4", "6"], ["prism", "0", "1", "1"], ["cube", "0"], ["tetra", "1", "1"]]
)
def test_gen_invalid(cli, argv):
    code, _, err = cli(["gen", *argv])
    assert code == 2
    assert "error" in err


def test_compute_cube(cli):
    code, out, _ = cli(["compute"], gen(cli, "cube", "1"))
    assert code == 0
    assert coeffs(json.loads(out)) == ("1/1", "3/1", "3/1", "1/1")


def test_compute_prism(cli):
    code, out, _ = cli(["compute"], gen(cli, "prism", "1", "0", "1"))
    assert code == 0
    assert json.loads(out)["coefficients"]["c1"] == {"num": "5", "den": "2"}


def test_compute_breakdown(cli):
    code, out, _ = cli(["compute", "--breakdown"], gen(cli, "tetra", "2", "3", "5"))
    assert code == 0
    doc = json.loads(out)
    row = next(e for e in doc["edges"] if e["endpoints"] == [[2, 0, 0], [0, 3, 0]])
    assert (row["m"], row["s"]) == (5, {"num": "-1", "den": "5"})
    assert len(doc["facets"]) == 4
    assert {"normal", "relative_volume", "correction"} == set(doc["facets"][0])


def test_compute_table(cli):
    code, out, _ = cli(["compute", "--format", "table", "--breakdown"], gen(cli, "tetra", "2", "3", "5"))
    assert code == 0
    assert "Vol(E)" in out and "C(F)" in out and "-1/5" in out


def test_compute_byte_stable(cli):
    doc = gen(cli, "prism", "2", "1", "3", "--fuzz-seed", "4")
    outs = {cli(["compute", "--breakdown"], doc)[1] for _ in range(3)}
    assert len(outs) == 1


def test_compute_files(cli, tmp_path):
    src, dst = tmp_path / "in.json", tmp_path / "out.json"
    code, _, _ = cli(["gen", "cube", "3", "-o", str(src)])
    assert code == 0
    code, out, _ = cli(["compute", "-i", str(src), "-o", str(dst)])
    assert code == 0 and out == ""
    assert coeffs(json.loads(dst.read_text())) == ("1/1", "9/1", "27/1", "27/1")


@pytest.mark.parametrize(
    "text, name",
    [
        ('{"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1.0]]}', "InputError"),
        ('{"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,true]]}', "InputError"),
        ('{"vertices": [[0,0,0],[1,0,0],[0,1,0]]}', "TooFewPoints"),
        ('{"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0]]}', "NotFullDimensional"),
        ('{"vertices": [[0,0,0],[2,0,0],[0,2,0],[2,2,0],[1,1,1]]}', "NotSimple"),
        ('{"vertices": [[0,0,0],[2,0,0],[0,2,0],[0,0,2],[1,0,0]]}', "NonVertexInput"),
        ('{"points": []}', "InputError"),
        ("not json", "InputError"),
    ],
)
def test_compute_invalid(cli, text, name):
    code, _, err = cli(["compute"], text)
    assert code == 2
    assert name in err


def test_allow_interior(cli):
    text = '{"vertices": [[0,0,0],[2,0,0],[0,2,0],[0,0,2],[1,0,0]]}'
    code, out, _ = cli(["compute", "--allow-interior"], text)
    assert code == 0
    assert coeffs(json.loads(out))[3] == "4/3"


def test_big_integers_as_strings(cli):
    k = 2**70
    text = json.dumps({"vertices": [[str(k), "0", "0"], [str(k + 1), 0, 0], [str(k), 1, 0], [str(k), 0, 1]]})
    code, out, _ = cli(["compute", "--breakdown"], text)
    assert code == 0
    doc = json.loads(out)
    assert coeffs(doc) == ("1/1", "11/6", "1/1", "1/6")
    assert str(k) in {p[0] for e in doc["edges"] for p in e["endpoints"]}


def test_verify_ok(cli):
    assert cli(["verify"], gen(cli, "cube", "1"))[0] == 0
    code, out, _ = cli(["verify"], gen(cli, "prism", "2", "2", "4"))
    assert code == 0
    doc = json.loads(out)
    assert doc["verification"]["match"] is True
    assert doc["coefficients"]["c1"] == {"num": "5", "den": "1"}


def test_verify_fuzzed_lmax(cli):
    code, out, _ = cli(["verify", "--lmax", "5"], gen(cli, "tetra", "2", "3", "5", "--fuzz-seed", "9"))
    assert code == 0
    assert len(json.loads(out)["verification"]["counts"]) == 6


def test_verify_mismatch(cli):
    code, out, _ = cli(["verify", "--inject-c1-delta", "1/7"], gen(cli, "cube", "1"))
    assert code == 4
    doc = json.loads(out)
    assert doc["verification"]["deltas"][1] == {"num": "1", "den": "7"}


def test_verify_too_large(cli, monkeypatch):
    doc = gen(cli, "cube", "3")
    code, _, err = cli(["verify", "--cell-cap", "100"], doc)
    assert code == 5 and "OracleTooLarge" in err
    monkeypatch.setenv("EHRHART3_CELL_CAP", "100")
    assert cli(["verify"], doc)[0] == 5


def test_bad_arguments(cli):
    assert cli(["frobnicate"])[0] == 2
    assert cli(["verify", "--lmax", "2"], gen(cli, "cube", "1"))[0] == 2


def test_module_entry_point():
    doc = subprocess.run(
        [sys.executable, "-m", "ehrhart3", "gen", "prism", "1", "0", "1"],
        capture_output=True, text=True, check=True,
    ).stdout
    res = subprocess.run(
        [sys.executable, "-m", "ehrhart3", "compute", "--format", "table"],
        input=doc, capture_output=True, text=True,
    )
    assert res.returncode == 0
    assert "5/2" in res.stdout
