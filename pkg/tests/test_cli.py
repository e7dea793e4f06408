import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from schubcalc.cli import factor_linear, run
from schubcalc.formal import formal_from_json, theta_formal
from schubcalc.locus import locus_from_json, render_locus
from schubcalc.mpoly import MPoly
from schubcalc.nilcox import double_schubert
from schubcalc.shapes import Shape
from schubcalc.transition import TransitionTree, stanley_coeffs
from schubcalc.weyl import parse_perm

GOLDEN = Path(__file__).parent / "golden"


def call(*argv, env=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_schubert_latex_golden():
    code, out, _ = call("schubert", "--type", "A", "--w", "3,2,1", "--format", "latex")
    assert code == 0
    assert out.strip() == "(y_1-z_1)(y_1-z_2)(y_2-z_1)"
    assert out == (GOLDEN / "schubert_A_321.tex").read_text()


def test_theta_formal_text():
    code, out, _ = call("theta", "--k", "1", "--shape", "3,1,1", "--formal")
    assert code == 0
    assert out.strip() == "c1^2*c3 - c1*c4 - c2*c3"


def test_coeffs_golden():
    code, out, _ = call("coeffs", "--type", "C", "--w", "3,-1,2,6,4,5", "--k", "1")
    assert code == 0 and out == (GOLDEN / "coeffs_example.txt").read_text()


def test_locus_golden():
    code, out, _ = call("locus", "--type", "C", "--w", "3,-1,-2", "--a", "1,2", "--b", "0,1", "--n", "3")
    assert code == 0
    assert out.splitlines()[0] == (GOLDEN / "locus_example_a.tex").read_text().splitlines()[0]


def test_verify_suite_exit_code():
    code, out, _ = call("verify", "--suite", "xtoy", "--n", "3")
    assert code == 0
    assert out.startswith("PASS xtoy")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["schubert", "--type", "C"],
        ["schubert", "--type", "C", "--w", "1,1"],
        ["schubert", "--type", "C", "--w", "3,-1,-2", "--xvars", "2"],
        ["theta", "--k", "1", "--shape", "2,2"],
        ["split", "--w", "2,1", "--a", "1", "--b", "1"],
        ["schubert", "--w", "1", "--unknown-flag"],
    ],
)
def test_invalid_input_exits_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_json_outputs_round_trip():
    code, out, _ = call("schubert", "--type", "C", "--w", "3,-1,-2", "--format", "json")
    data = json.loads(out)
    assert MPoly.from_json(data["poly"]) == double_schubert(parse_perm("3,-1,-2"), "C")

    code, out, _ = call("theta", "--k", "1", "--shape", "3,1,1", "--formal", "--format", "json")
    assert formal_from_json(json.loads(out)["poly"]) == theta_formal(Shape((3, 1, 1), 1))

    code, out, _ = call("tree", "--w", "3,-1,2,6,4,5", "--k", "1", "--format", "json")
    tree = TransitionTree.from_json(json.loads(out))
    assert len(tree.leaves) == 6

    code, out, _ = call("coeffs", "--w", "3,-1,2,6,4,5", "--k", "1", "--format", "json")
    got = {tuple(Shape.from_json(r["shape"]).parts): r["count"] for r in json.loads(out)["coeffs"]}
    want = {s.parts: m for s, m in stanley_coeffs(parse_perm("3,-1,2,6,4,5"), "C", 1).items()}
    assert got == want

    code, out, _ = call("locus", "--w", "3,-1,-2", "--a", "1,2", "--b", "0,1", "--n", "3", "--format", "json")
    f = locus_from_json(json.loads(out))
    assert render_locus(f).startswith(r"\Theta_{(3,2)}")

    code, out, _ = call("split", "--w", "3,-1,-2", "--a", "1,2", "--b", "0,1", "--format", "json")
    assert len(json.loads(out)["terms"]) == 3


def test_negative_values_after_flags():
    code, out, _ = call("schubert", "--type", "C", "--w", "-2,-1")
    assert code == 0 and out.strip()


def test_out_flag(tmp_path):
    dest = tmp_path / "x.txt"
    code, out, _ = call("theta", "--k", "0", "--shape", "2,1", "--formal", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().strip() == "c1*c2 - 2*c3"


def test_locus_check_flag():
    code, out, _ = call("locus", "--type", "D", "--w", "-2,-1,3", "--a", "box,2", "--b", "box,2", "--n", "3", "--check")
    assert code == 0


def test_factor_linear():
    y1, y2, z1 = (MPoly.var(v) for v in ("y1", "y2", "z1"))
    rest, facs = factor_linear((y1 - z1) * (y2 + z1) * 3)
    assert rest == 3 and len(facs) == 2


def test_console_script_is_deterministic():
    cmd = [sys.executable, "-m", "schubcalc", "split", "--w", "3,-1,-2", "--a", "1,2", "--b", "0,1"]
    env = {"SCHUBERT_SEED": "7", "PATH": "/usr/bin:/bin"}
    a = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    assert a == b and a


def test_bad_seed_is_rejected(monkeypatch):
    monkeypatch.setenv("SCHUBERT_SEED", "abc")
    code, _, err = call("locus", "--w", "3,-1,-2", "--a", "1,2", "--b", "0,1", "--n", "4", "--check")
    assert code == 2 and "SCHUBERT_SEED" in err
