import json

import pytest

from qosp import centre
from qosp.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootdata(capsys):
    code, out, _ = call(capsys, "rootdata", "--l", "6")
    assert code == 0
    assert json.loads(out) == {"l": 6, "lprime": 3, "L": 6, "N": 24, "twice_odd": True}


def test_nf_generic_three_terms(capsys):
    code, out, _ = call(capsys, "nf", "--generic", "e*f")
    data = json.loads(out)
    assert code == 0 and len(data["terms"]) == 3
    assert data["field"] == {"mode": "generic"}


def test_nf_root(capsys):
    code, out, _ = call(capsys, "nf", "--l", "3", "k^3")
    assert code == 0 and json.loads(out)["terms"] == [{"a": 0, "b": 0, "c": 3, "coeff": "1"}]


def test_cheb(capsys):
    code, out, _ = call(capsys, "cheb", "--family", "p", "--m", "3")
    assert code == 0 and json.loads(out) == [0, 3, 0, 1]


def test_verify_centre_l6(capsys):
    code, out, _ = call(capsys, "verify", "--l", "6", "--what", "centre")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    names = {r["relation"] for r in data["results"]}
    assert {"rel2", "rel3", "rel4"} <= names


@pytest.mark.parametrize("what", ["scasm", "srel", "centre", "all"])
def test_verify_each_group(capsys, what):
    code, out, _ = call(capsys, "verify", "--l", "4", "--what", what)
    assert code == 0 and json.loads(out)["pass"]


def test_verify_generic(capsys):
    code, out, _ = call(capsys, "verify", "--generic", "--what", "all", "--max-m", "4")
    assert code == 0 and json.loads(out)["pass"]
    code, _, _ = call(capsys, "verify", "--generic", "--what", "srel")
    assert code == 2


def test_classify_l3(capsys):
    code, out, _ = call(capsys, "classify", "--l", "3")
    data = json.loads(out)
    assert code == 0
    assert sorted({x["d"] for x in data["nilpotent"]}) == [1, 2, 3, 4, 5, 6]


def test_rep_build_check_eval(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, _, _ = call(capsys, "rep", "build", "--l", "4", "--family", "mplus", "--lambda", "z", "--phi", "2", "--sigma", "1", "--out", str(path))
    assert code == 0 and path.exists()
    code, out, _ = call(capsys, "rep", "check", str(path))
    report = json.loads(out)
    assert code == 0 and report["relations_pass"] and report["scasimir_is_sigma_U"]
    assert report["central_character"]["F"] == "16"
    code, out, _ = call(capsys, "eval", "--l", "4", "--rep", str(path), "f^4")
    assert code == 0 and json.loads(out)["scalar"] == "16"
    code, _, err = call(capsys, "eval", "--l", "3", "--rep", str(path), "f")
    assert code == 2 and "l=4" in err


def test_rep_build_nilpotent_quantisation_error(capsys):
    code, _, err = call(capsys, "rep", "build", "--l", "3", "--family", "nilpotent", "--d", "2", "--lambda", "1")
    assert code == 2 and "quantisation" in err


def test_usage_errors(capsys):
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "rootdata")[0] == 2
    assert call(capsys, "rootdata", "--l", "2")[0] == 2
    assert call(capsys, "nf", "--generic", "e^-1")[0] == 2
    assert call(capsys, "rep", "check", "/nonexistent.json")[0] == 2
    assert call(capsys, "--version")[0] == 0


def test_output_is_deterministic(capsys):
    a = call(capsys, "classify", "--l", "4", "--output", "pretty")[1]
    b = call(capsys, "--output", "pretty", "classify", "--l", "4")[1]
    assert a == b and "\n  " in a


def test_failure_prints_both_sides(capsys, monkeypatch):
    original = centre.srel_checks

    def corrupted(root, field=None):
        return [centre.Check(c.relation, c.lhs, -c.rhs, c.l) for c in original(root, field)]

    monkeypatch.setattr(centre, "srel_checks", corrupted)
    code, out, _ = call(capsys, "verify", "--l", "6", "--what", "srel")
    data = json.loads(out)
    assert code == 1 and not data["pass"]
    bad = [r for r in data["results"] if not r["pass"]]
    assert bad and all("lhs" in r and "rhs" in r for r in bad)
