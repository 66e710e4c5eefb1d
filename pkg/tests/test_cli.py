import json
from pathlib import Path

import pytest

from charvar.cli import main
from charvar.compactified import EigenvalueData
from charvar.stability import s1_configuration

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("mu,expected", [
    ("1,1;1,1;1,1;1,1", "2"),
    ("1,1,1;1,1,1;1,1,1", "2"),
])
def test_dimension(capsys, mu, expected):
    code, out, _ = run(capsys, "dimension", "--g", "0", "--mu", mu)
    assert code == 0 and out.strip() == expected


def test_dimension_torus_case(capsys):
    assert run(capsys, "dimension", "--g", "1", "--mu", "1")[1].strip() == "0"


def test_dimension_malformed(capsys):
    code, _, err = run(capsys, "dimension", "--g", "0", "--mu", "1,1;x")
    assert code == 2 and "malformed" in err


def test_fk_verify(capsys):
    code, out, _ = run(capsys, "fk-verify", "--samples", "1000", "--seed", "0")
    assert code == 0 and out.strip() == "1000/1000 exact zeros"
    code, out, _ = run(capsys, "fk-verify", "--samples", "1")
    assert code == 0 and out.strip() == "1/1 exact zeros"


def test_fk_verify_negative_control(capsys):
    code, out, _ = run(capsys, "fk-verify", "--samples", "3", "--negative-control")
    assert code == 1 and "first failure" in out


def test_fk_verify_deterministic(capsys):
    a = run(capsys, "fk-verify", "--samples", "20", "--seed", "5", "--json")[1]
    b = run(capsys, "fk-verify", "--samples", "20", "--seed", "5", "--json")[1]
    assert a == b and json.loads(a)["zeros"] == 20


def test_sl3_fit(capsys):
    code, out, _ = run(capsys, "sl3-fit", "--samples", "30")
    assert code == 0
    assert out.count("leading form = X^3 - X*Y*Z + Y^3") == 3
    assert "FAIL" not in out


@pytest.mark.parametrize("name,verdict,m1,m2", [
    ("s1_n5.json", "strictly_semistable", 2, 0),
    ("generic_n5.json", "stable", 0, 0),
    ("n4_m1_1_m2_2.json", "unstable", 1, 2),
])
def test_stability_fixtures(capsys, name, verdict, m1, m2):
    code, out, _ = run(capsys, "stability", str(FIXTURES / name), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["agree"]
    assert (rep["verdict"], rep["m1"], rep["m2"]) == (verdict, m1, m2)


def test_stability_invalid_matrix(capsys, tmp_path):
    data = s1_configuration(EigenvalueData([2, 3, 5, 7, 11])).to_json()
    data["matrices"][1] = {"a": "1", "b": "0", "c": "0", "d": "1", "e": "1"}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "stability", str(path))
    assert code == 2 and "matrix 2" in err


def test_limit(capsys):
    code, out, _ = run(capsys, "limit", str(FIXTURES / "n5_family_12.json"))
    assert code == 0 and "in orbit of s1: yes" in out


@pytest.mark.parametrize("case,dim,label", [("n4", 1, "S¹"), ("n5-equator", 2, "S²"), ("n5-full", 3, "S³")])
def test_complex(capsys, case, dim, label):
    code, out, _ = run(capsys, "complex", "--case", case, "--certify", str(dim))
    assert code == 0 and out.strip().endswith(f"{label}: PASS")


def test_complex_wrong_dimension(capsys):
    code, out, _ = run(capsys, "complex", "--case", "n4", "--certify", "2")
    assert code == 1 and "FAIL" in out


def test_identities(capsys):
    code, out, _ = run(capsys, "identities")
    assert code == 0 and out.strip().endswith("7/7 identities hold")
    code, out, _ = run(capsys, "identities", "--list")
    assert code == 0 and len(out.strip().splitlines()) == 7
    code, out, _ = run(capsys, "identities", "--negative-control")
    assert code == 1 and "7/9 identities hold" in out


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "complex", "--case", "n4", "--json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["homology"]["reduced_betti"] == [0, 1]


def test_samples_must_be_positive(capsys):
    with pytest.raises(SystemExit):
        main(["fk-verify", "--samples", "0"])
