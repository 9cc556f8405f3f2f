import json

import pytest

from krkit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cartan_json(capsys):
    code, out, _ = run(capsys, "cartan", "--types", "F4a1")
    data = json.loads(out)
    assert code == 0
    assert data[0]["theta_1"]["root"] == "α2+2α3+2α4"
    assert data[0]["D"] == 2


def test_seq_text(capsys):
    code, out, _ = run(capsys, "seq", "--types", "E6a2", "--format", "text")
    assert code == 0 and "canonical_i: (4,3,2)" in out


def test_common_flags_before_command(capsys):
    code, out, _ = run(capsys, "--format", "text", "--types", "E6a2", "seq")
    assert code == 0 and out.startswith("canonical_i: (4,3,2)")
    code, out, _ = run(capsys, "--format", "text", "seq", "--format", "json", "--types", "E6a2")
    assert json.loads(out)[0]["type"] == "E6a2"


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--type", "E6a1", "--ell", "1")
    data = json.loads(out)
    assert code == 0 and data["size_S"] == 5 and len(data["rows"]) == 5
    code, out, _ = run(capsys, "branch", "--type", "E6a1", "--ell", "1", "--format", "csv")
    assert out.splitlines()[0] == "dim,highest_weight,p,phi"


def test_norm_resolved(capsys):
    code, out, _ = run(capsys, "norm", "e2 e1 e0 w", "--type", "E8a1", "--ell", "1", "--trace")
    data = json.loads(out)
    assert code == 0 and data["value"] == "q^2 + 1" and data["trace"]


def test_norm_residual_and_hw(capsys):
    code, out, _ = run(capsys, "norm", "e0 w", "--pair", "f1 w", "--type", "A1a1", "--ell", "2")
    data = json.loads(out)
    assert code == 1 and data["residual"] == "(1)*(e0 w, f1 w)"
    code, out, _ = run(capsys, "norm", "f1 f2 w", "--type", "A2", "--axioms", "hw", "--highest", "1,1")
    assert code == 0 and json.loads(out)["value"] == "q^2 + 1"


def test_norm_fuel(capsys):
    code, out, _ = run(capsys, "norm", "e0(2) e1 e2 e3 e1 e0(2) w", "--type", "E6a1", "--ell", "2",
                       "--fuel", "3")
    assert code == 1 and json.loads(out)["exhausted"]


def test_verify_reports(capsys):
    code, out, _ = run(capsys, "verify", "sequences", "--types", "F4a1,E6a2")
    [rep] = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["suite"] == "sequences"
    assert set(rep) == {"suite", "status", "counters", "counterexamples", "wall_time"}
    code, out, _ = run(capsys, "verify", "modules", "--suite", "a1kr", "--format", "csv")
    assert code == 0 and out.startswith("suite,check,status,checked,failed")
    assert all(",pass," in line for line in out.splitlines()[1:])


def test_verify_m_identities_with_config(capsys, tmp_path):
    cfg = tmp_path / "krkit.ini"
    cfg.write_text("[krkit]\ntypes = E6a2\nbound = 2\noracle-bound = 1\nformat = text\n")
    code, out, _ = run(capsys, "verify", "m-identities", "--config", str(cfg))
    assert code == 0 and out.startswith("m-identities: pass")


def test_make_report_statuses():
    from krkit.report import OutcomeSet

    res = OutcomeSet()
    res.get_or_add("a").record(True)
    assert cli.make_report("x", res, 0.1)["status"] == "pass"
    res.get_or_add("b")
    assert cli.make_report("x", res, 0.1)["status"] == "partial"
    res.get_or_add("c").record(False, {"why": "test"})
    rep = cli.make_report("x", res, 0.1)
    assert rep["status"] == "fail" and rep["counterexamples"] == [{"why": "test", "check": "c"}]


@pytest.mark.parametrize("argv", [
    ["verify", "nope"],
    ["cartan", "--types", "G2a1"],
    ["norm", "x1 w", "--type", "E6a1"],
    ["norm", "e1 w", "--type", "A2", "--axioms", "hw"],
    ["branch", "--type", "E6a1", "--ell", "0"],
    ["verify", "modules", "--suite", "bogus"],
    ["verify", "m-identities", "--bound", "1"],
    ["cartan", "--config", "/nonexistent.ini"],
])
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == 2


def test_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("KRKIT_THREADS", "many")
    assert cli.main(["verify", "sequences"]) == 2


def test_threads_run_in_parallel(capsys, monkeypatch):
    monkeypatch.setenv("KRKIT_THREADS", "2")
    reports = cli.run_many(["sequences", "modules"], {"types": ["E6a2"], "suites": ("a1kr",)})
    assert [r["suite"] for r in reports] == ["sequences", "modules"]


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "cartan")
    _, b, _ = run(capsys, "cartan")
    assert a == b
