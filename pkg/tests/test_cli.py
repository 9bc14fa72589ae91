import json

import pytest

from homcat.cli import data_path, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def statuses(report):
    return {k: v["status"] for k, v in report["axioms"].items()}


def test_check_axioms_finset(capsys):
    code, r = run(capsys, "check-axioms", "--instance", "finset", "--level", "2")
    assert code == 1
    assert statuses(r) == {"A1": "pass", "A2": "pass", "A3": "pass", "A4": "fail", "A5": "pass"}
    assert r["format"] == "homcat.report/1"


def test_check_axioms_sset(capsys):
    code, r = run(capsys, "check-axioms", "--instance", "sset", "--level", "3")
    assert code == 1
    assert statuses(r) == {"A1": "pass", "A2": "pass", "A3": "fail", "A4": "fail", "A5": "pass"}


def test_check_axioms_table(capsys):
    code, r = run(
        capsys, "check-axioms", "--instance", f"table:{data_path('lattice.json')}",
        "--cosimplicial", str(data_path("lattice_cosimplicial.json")),
    )
    assert code == 0 and set(statuses(r).values()) == {"pass"}


def test_homology_commands(capsys, tmp_path):
    code, r = run(capsys, "homology", "point", "--reduced", "true")
    assert code == 0 and all(h["betti"] == 0 and not h["torsion"] for h in r["homology"])
    code, r = run(capsys, "homology", str(data_path("torus.json")))
    assert [h["betti"] for h in r["homology"]] == [1, 2, 1]
    code, r = run(capsys, "homology", str(data_path("klein.json")), "--coeff", "Zmod:2")
    assert [h["torsion"] for h in r["homology"]] == [[2], [2, 2], [2]]
    code, r = run(capsys, "homology", "2", "--instance", "finset")
    assert [h["betti"] for h in r["homology"]] == [1, 0]


def test_build_then_homology(capsys, tmp_path):
    out = tmp_path / "s2.json"
    assert main(["build", "--sphere", "2", "--out", str(out)]) == 0
    code, r = run(capsys, "homology", str(out))
    assert [h["betti"] for h in r["homology"]] == [1, 0, 1]
    out = tmp_path / "torus.json"
    assert main(["build", "--recipe", str(data_path("torus_cw.json")), "--out", str(out)]) == 0
    code, r = run(capsys, "homology", str(out))
    assert [h["betti"] for h in r["homology"]] == [1, 2, 1]


def test_homotopy_commands(capsys):
    code, r = run(capsys, "homotopy-classes", "2", "3", "--instance", "finset")
    assert code == 0 and len(r["classes"]) == 1 and len(r["morphisms"]) == 9
    code, r = run(capsys, "homotopy-equivalent", "1", "3", "--instance", "finset")
    assert code == 0 and r["equivalent"]
    code, r = run(capsys, "contractible", "boundary:2")
    assert code == 1 and not r["contractible"]
    code, r = run(capsys, "contractible", "delta:2")
    assert code == 0


def test_invariance_command(capsys):
    code, r = run(capsys, "invariance", "point", "delta:1")
    assert code == 0
    assert all(p["equal_induced_maps"] for p in r["pairs"])
    assert {(p["f"], p["g"]) for p in r["pairs"]} >= {(1, 0)}


def test_chain_homotopy_command(capsys):
    code, r = run(capsys, "chain-homotopy", "delta:1", "boundary:2", "--nmax", "1")
    assert code == 0 and r["built"] and all(c["passed"] for c in r["checks"])


def test_pipeline_command(capsys):
    code, r = run(capsys, "pipeline", "--instance", "finset")
    assert code == 1 and r["claim_iii"]["status"] == "pass"


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    code, r = run(capsys, "homology", str(bad))
    assert code == 2 and "line 1" in r["message"]
    code, r = run(capsys, "homology", str(tmp_path / "missing.json"))
    assert code == 2
    code, r = run(capsys, "check-axioms", "--instance", "nope")
    assert code == 2
    code, r = run(capsys, "homology", "0", "--instance", "finset")
    assert code == 2
    code, r = run(capsys, "build")
    assert code == 2


def test_bound_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("HOMCAT_BOUND", "10")
    code, r = run(capsys, "homotopy-classes", "delta:2", "delta:2")
    assert code == 2 and r["error"] == "resource-limit-exceeded"
    monkeypatch.setenv("HOMCAT_BOUND", "-1")
    code, r = run(capsys, "homology", "point")
    assert code == 2


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        main(["check-axioms", "--instance", "finset", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()


def test_bad_coefficient_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["homology", "boundary:2", "--coeff", "Z/2"])
    assert exc.value.code == 2
    assert "Zmod" not in capsys.readouterr().out
