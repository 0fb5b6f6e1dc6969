import json

import pytest

from quasiext.cli import main

from conftest import FIXTURES

F = {p.stem: str(p) for p in FIXTURES.iterdir()}
PAIR = ["--big", F["c4"], "--small", F["c3"], "--s", F["s"]]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_theorem_canonical(capsys):
    code, out, _ = run(capsys, "verify-theorem", *PAIR, "--r", F["r"], "--op", F["min_c3"], "--kind", "quasi-overlap")
    assert code == 0
    assert "OUTCOME verified" in out
    assert "FAIL" not in out


def test_check_operator_meet_b2(capsys):
    code, out, _ = run(capsys, "check-operator", "--lattice", F["b2"], "--operator", F["meet_b2"],
                       "--kind", "quasi-overlap")
    assert code == 1
    fails = [ln for ln in out.splitlines() if ln.startswith("FAIL")]
    assert len(fails) == 1 and fails[0].startswith("FAIL QO2  witness (p, q)")


def test_gen_chain_4(capsys):
    code, out, _ = run(capsys, "gen", "chain", "4")
    assert code == 0
    assert out == (FIXTURES / "chain4.lat").read_text()


@pytest.mark.parametrize("argv, fixture", [
    (["gen", "diamond"], "m3"),
    (["gen", "pentagon"], "n5"),
    (["gen", "boolean", "2"], "boolean2"),
])
def test_gen_others(capsys, argv, fixture):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == (FIXTURES / f"{fixture}.lat").read_text()


def test_gen_product(capsys, tmp_path):
    c3 = tmp_path / "c3.lat"
    c3.write_text(run(capsys, "gen", "chain", "3")[1])
    code, out, _ = run(capsys, "gen", "product", str(c3), str(c3))
    assert code == 0 and out == (FIXTURES / "c3xc3.lat").read_text()


def test_extend_writes_operator(capsys, tmp_path):
    out_file = tmp_path / "ext.op"
    code, out, _ = run(capsys, "extend", *PAIR, "--r", F["r"], "--op", F["min_c3"], "--kind", "overlap",
                       "-o", str(out_file))
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("operator min^E on C4\n")
    assert "b b -> a\n" in text
    code, _, _ = run(capsys, "check-operator", "--lattice", F["c4"], "--operator", str(out_file),
                     "--kind", "quasi-overlap")
    assert code == 0


def test_top_boundary_violation(capsys):
    code, out, _ = run(capsys, "verify-theorem", *PAIR, "--r", F["r_top"], "--op", F["min_c3"],
                       "--kind", "quasi-overlap")
    assert code == 1
    assert "FAIL boundary-one  witness (b)" in out
    assert "FAIL extension-QO3  witness (b, b)" in out
    assert "OUTCOME preconditions-failed" in out


def test_check_retraction(capsys):
    assert run(capsys, "check-retraction", *PAIR, "--r", F["r"], "--boundary")[0] == 0
    code, out, _ = run(capsys, "check-retraction", *PAIR, "--r", F["r_noretract"])
    assert code == 1 and "FAIL retraction  witness (m)" in out
    code, out, _ = run(capsys, "check-retraction", *PAIR, "--r", F["r_top"])
    assert code == 0
    code, out, _ = run(capsys, "check-retraction", *PAIR, "--r", F["r_top"], "--boundary")
    assert code == 1
    code, out, _ = run(capsys, "check-retraction", *PAIR, "--r", F["r"], "--strict-homomorphism")
    assert code == 0 and "PASS s-preserves-join" in out


def test_check_lattice(capsys):
    assert run(capsys, "check-lattice", F["c4"])[0] == 0
    code, out, _ = run(capsys, "check-lattice", F["notlattice"])
    assert code == 1 and "FAIL lattice  witness (a, b)" in out
    code, out, _ = run(capsys, "check-lattice", F["cycle"])
    assert code == 1 and "FAIL partial-order  witness (0, a)" in out


def test_enumerations(capsys):
    code, out, _ = run(capsys, "enumerate-retractions", "--big", F["c4"], "--small", F["c3"], "--boundary")
    assert code == 0 and out.startswith("2 retraction pair(s)")
    code, out, _ = run(capsys, "enumerate-operators", "--lattice", F["c3"], "--kind", "quasi-overlap")
    assert code == 0 and out.startswith("1 quasi-overlap operator(s) on C3")
    code, out, _ = run(capsys, "--json", "enumerate-operators", "--lattice", F["c4"], "--kind", "quasi-grouping")
    doc = json.loads(out)
    assert doc["exit"] == 0 and doc["verdicts"] == [] and len(doc["results"]) == 7


def test_usage_and_input_errors(capsys):
    code, _, err = run(capsys, "check-operator", "--lattice", F["c3"], "--operator", F["missing_row"],
                       "--kind", "quasi-overlap")
    assert code == 2 and "(1, 1)" in err
    assert run(capsys, "check-lattice", str(FIXTURES / "nope.lat"))[0] == 2
    assert run(capsys, "gen", "chain", "x")[0] == 2
    assert run(capsys, "gen", "torus")[0] == 2
    assert run(capsys, "--max-size", "3", "gen", "chain", "4")[0] == 2
    assert run(capsys, "enumerate-operators", "--lattice", F["c3xc3"], "--kind", "quasi-overlap")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_max_size_flag_position(capsys):
    assert run(capsys, "gen", "chain", "4", "--max-size", "3")[0] == 2
    assert run(capsys, "gen", "chain", "4", "--max-size", "4")[0] == 0


INVOCATIONS = [
    ["verify-theorem", *PAIR, "--r", F["r"], "--op", F["min_c3"], "--kind", "quasi-overlap"],
    ["verify-theorem", *PAIR, "--r", F["r_top"], "--op", F["min_c3"], "--kind", "quasi-overlap"],
    ["verify-theorem", *PAIR, "--r", F["r"], "--op", F["max_c3"], "--kind", "quasi-grouping"],
    ["check-operator", "--lattice", F["b2"], "--operator", F["meet_b2"], "--kind", "quasi-overlap"],
    ["check-operator", "--lattice", F["b2"], "--operator", F["join_b2"], "--kind", "quasi-grouping"],
    ["check-retraction", *PAIR, "--r", F["r_nonmono"], "--boundary", "--strict-homomorphism"],
    ["check-lattice", F["notlattice"]],
]


@pytest.mark.parametrize("argv", INVOCATIONS, ids=lambda a: a[0])
def test_json_and_human_agree(capsys, argv):
    code_h, human, _ = run(capsys, *argv)
    code_j, js, _ = run(capsys, "--json", *argv)
    doc = json.loads(js)
    assert code_h == code_j == doc["exit"]
    assert doc["command"] == argv[0]
    lines = [ln for ln in human.splitlines() if ln.startswith(("PASS", "FAIL"))]
    assert len(lines) == len(doc["verdicts"])
    for ln, v in zip(lines, doc["verdicts"]):
        assert ln.startswith(("PASS " if v["pass"] else "FAIL ") + v["axiom"])
        if not v["pass"]:
            w = v["witness"]
            assert f"witness ({', '.join(w['inputs'])})" in ln
            assert w["message"] in ln
    # byte-deterministic
    assert run(capsys, *argv)[1] == human
    assert run(capsys, "--json", *argv)[1] == js
