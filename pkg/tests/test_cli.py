import json
import subprocess
import sys

import pytest

from youngpoly.cli import main
from youngpoly.fillings import gen_poly
from youngpoly.polynomial import Polynomial, from_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_ykey_all_routes(capsys):
    code, out, _ = run(capsys, "compute", "ykey", "2,3,0", "--n", "3", "--via", "all")
    assert code == 0
    assert from_text(out, 3) == gen_poly("YKSSF", (2, 3, 0), 3)
    assert len(from_text(out, 3)) == 9


def test_compute_schur_and_trivial(capsys):
    code, out, _ = run(capsys, "compute", "schur", "2,1", "--n", "3")
    assert code == 0 and len(from_text(out, 3)) == 7
    assert sum(c for _, c in from_text(out, 3).terms) == 8
    code, out, _ = run(capsys, "compute", "key", "0,0,0", "--n", "3")
    assert out.strip() == "1"


def test_compute_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "key", "0,3,2", "--format", "json", "--via", "all")
    obj = json.loads(out)
    assert obj["agree"] is True
    assert Polynomial.from_json_obj(obj["polynomial"]) == gen_poly("KSSF", (0, 3, 2), 3)


def test_compute_permutation_forms(capsys):
    _, a, _ = run(capsys, "compute", "ysch", "42513", "--via", "all")
    _, b, _ = run(capsys, "compute", "ysch", "--perm-list", "4,2,5,1,3")
    assert a == b and len(from_text(a, 5)) == 5


def test_usage_errors(capsys):
    assert run(capsys, "compute", "key", "0,3,2", "--via", "pipedreams")[0] == 1
    assert run(capsys, "compute", "nope", "1")[0] == 1
    assert run(capsys, "compute", "key", "0,x,2")[0] == 1
    assert run(capsys, "compute", "key", "0,3,2", "--n", "4")[0] == 1
    assert run(capsys, "verify", "no-such-theorem")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_route_disagreement_exits_2(capsys, monkeypatch):
    from youngpoly import cli

    routes = dict(cli.ROUTES["key"])
    routes["ops"] = lambda a: Polynomial.zero(len(a))
    monkeypatch.setitem(cli.ROUTES, "key", routes)
    code, out, _ = run(capsys, "compute", "key", "0,3,2", "--via", "all")
    assert code == 2 and "disagree" in out


def test_verify(capsys):
    assert run(capsys, "verify", "key-equals-atom-sum", "--max-size", "5", "--n", "3")[:2] == (0, "key-equals-atom-sum: PASS\n")
    assert run(capsys, "verify", "--theorem", "yqs-qs", "--max-size", "6", "--max-len", "4")[0] == 0
    assert run(capsys, "verify", "crystal-b21")[0] == 0
    code, out, _ = run(capsys, "verify", "--list")
    assert "module" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from youngpoly import suites

    monkeypatch.setitem(suites.SUITES, "always-fails", suites.Suite(lambda m, s: [{"x": 1}], 1, 1, "demo"))
    code, out, _ = run(capsys, "verify", "always-fails", "--format", "json")
    assert code == 2
    assert json.loads(out)["counterexamples"] == [{"x": 1}]


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "key", "0,3,2", "--into", "fs")
    assert code == 0
    assert out.strip() == "key_0,3,2 = fslide_230 + fslide_221 + fslide_131 + fslide_032"
    code, out, _ = run(capsys, "expand", "ysch", "43512", "--into", "ykey", "--format", "json")
    coeffs = {tuple(c["index"]): c["coeff"] for c in json.loads(out)["coefficients"]}
    assert coeffs == {(0, 0, 0, 0, 3): 1, (0, 0, 2, 0, 1): 1}
    code, _, _ = run(capsys, "expand", "--poly", "x^(1,0)", "--n", "2", "--into", "QS")
    assert code == 1


def test_crystal_outputs(capsys, tmp_path):
    target = tmp_path / "b21.dot"
    code, _, _ = run(capsys, "crystal", "2,1", "--n", "3", "--dot", "--out", str(target))
    assert code == 0
    text = target.read_text(encoding="utf-8")
    assert text.startswith("digraph") and text.count("->") == 8
    code, out, _ = run(capsys, "crystal", "--key", "1,0,2", "--format", "json")
    obj = json.loads(out)
    assert Polynomial.from_json_obj(obj["character"]) == gen_poly("KSSF", (1, 0, 2), 3)


def test_pipedreams(capsys):
    code, out, _ = run(capsys, "pipedreams", "132", "--young")
    assert code == 0 and "ysch_132 = x^(0,1,1)" in out
    code, out, _ = run(capsys, "pipedreams", "31524", "--format", "json")
    assert json.loads(out)["count"] == 5


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "key-ykey", "0,1,2", "--brute-force")
    assert code == 0 and "True" in out and "2,1,0" in out
    code, out, _ = run(capsys, "classify", "all", "2,3", "--n", "3", "--format", "json")
    rows = json.loads(out)
    assert [r["classifier"] for r in rows] == ["yqs-qs"] and rows[0]["predicate"] is False


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "RFYC", "21534")
    assert code == 0 and "(6 items)" in out
    code, out, _ = run(capsys, "enumerate", "KSSF", "0,3,2", "--format", "json")
    assert json.loads(out)["count"] == 9
    code, out, _ = run(capsys, "enumerate", "compat", "22233")
    assert "(6 items)" in out


def test_apply_op(capsys):
    code, out, _ = run(capsys, "apply-op", "pihat:2,pihat:1", "0,2,3")
    assert from_text(out, 3) == gen_poly("YKSSF", (2, 3, 0), 3)
    assert run(capsys, "apply-op", "pi:5", "0,2,3")[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "youngpoly", "compute", "key", "0,3,2"], capture_output=True, text=True)
    assert res.returncode == 0 and len(res.stdout.split(" + ")) == 9
