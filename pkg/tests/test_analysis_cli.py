import json
import subprocess
import sys

import pytest

from permsym import cli
from permsym.analysis import run_analysis
from permsym.errors import InputError


def strip_timings(doc: dict) -> dict:
    doc = dict(doc)
    doc.pop("timings_ms", None)
    return doc


def test_report_contents_altpairs():
    rep = run_analysis("altpairs:7", 5)
    doc = rep.to_dict()
    assert doc["degree"] == 21
    assert doc["classification"]["subdegrees"] == [1, 10, 10]
    assert doc["valencies"] == [1, 10, 10]
    assert doc["algebra_dim"] == doc["orbital_count"] == 3
    assert doc["radical_dims"][0] == doc["algebra_dim"]
    assert doc["symmetric_verdict"]["status"] in (
        "symmetric_with_witness",
        "symmetric_semisimple",
    )
    assert doc["checks"]["cc_axioms"] is True


def test_report_deterministic_given_seed():
    a = strip_timings(run_analysis("altpairs:7", 5, seed=3).to_dict())
    b = strip_timings(run_analysis("altpairs:7", 5, seed=3).to_dict())
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_intransitive_rejected(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("degree 3\n(1 2)\n")
    with pytest.raises(InputError, match="transitive"):
        run_analysis(f"file:{path}", 3)


def test_composite_characteristic_rejected():
    with pytest.raises(InputError, match="prime"):
        run_analysis("sym:4", 6)


def test_oracle_flag_populates_checks():
    rep = run_analysis("frobenius:7,3", 7, oracle=True)
    assert rep.checks["oracle_dim"] == 3 and rep.checks["oracle_matches"]
    assert rep.checks["hecke"]["hecke_dim"] == 3
    assert rep.checks["hecke"]["matches_rank"]


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "permsym", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )
    return proc


def test_cli_analyze_json():
    proc = run_cli("analyze", "--group", "altpairs:7", "--char", "5", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["degree"] == 21
    assert doc["symmetric_verdict"]["status"].startswith("symmetric")


def test_cli_json_bytes_deterministic():
    args = ("analyze", "--group", "sym:4", "--char", "2", "--format", "json", "--seed", "1")
    a = strip_timings(json.loads(run_cli(*args).stdout))
    b = strip_timings(json.loads(run_cli(*args).stdout))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_cli_text_format():
    proc = run_cli("analyze", "--group", "example3_2", "--char", "3")
    assert proc.returncode == 0
    assert "not_symmetric" in proc.stdout
    assert "b+ab+a2b" in proc.stdout


def test_cli_exit_code_user_error():
    assert run_cli("analyze", "--group", "unknown:1", "--char", "3").returncode == 2
    assert run_cli("analyze", "--group", "sym:4", "--char", "9").returncode == 2
    # intransitive group from a file
    import tempfile, pathlib

    with tempfile.TemporaryDirectory() as d:
        path = pathlib.Path(d) / "g.txt"
        path.write_text("degree 4\n(1 2)\n")
        assert run_cli("analyze", "--file", str(path), "--char", "3").returncode == 2


def test_cli_exit_code_internal_error(monkeypatch):
    from permsym.errors import VerificationError

    def boom(*a, **k):
        raise VerificationError("synthetic failure")

    monkeypatch.setattr(cli, "run_analysis", boom)
    code = cli.main(["analyze", "--group", "sym:4", "--char", "2"])
    assert code == 3


def test_cli_file_input_round_trip(tmp_path):
    path = tmp_path / "grid.txt"
    path.write_text("degree 9\n(1 2 3)(4 5 6)(7 8 9)\n(1 4 7)(2 5 8)(3 6 9)\n")
    proc = run_cli("analyze", "--file", str(path), "--char", "2", "--format", "json")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["degree"] == 9 and doc["group_order"] == 9
    assert doc["orbital_count"] == 9  # regular action has rank equal to its order


def test_cli_catalog_lists_grammar():
    proc = run_cli("catalog")
    assert proc.returncode == 0
    for token in ("sym:n", "example3_2", "psl2cosets:q", "file:<path>"):
        assert token in proc.stdout


def test_cli_suite_subset_deterministic_and_negative_control():
    a = run_cli("suite", "--only", "frobenius")
    b = run_cli("suite", "--only", "frobenius")
    assert a.returncode == 0 and a.stdout == b.stdout
    bad = run_cli("suite", "--only", "frobenius", "--negative-control")
    assert bad.returncode == 1
    assert "FAIL" in bad.stdout and "frobenius" in bad.stdout


@pytest.mark.parametrize("group,char", [("example3_2", "3"), ("altpairs:7", "5")])
def test_pure_numpy_mode_matches_jit_mode(group, char):
    # the two kernel paths must produce identical reports, including the
    # enumerated witness functional, not just dimensions
    args = [sys.executable, "-m", "permsym", "analyze", "--group", group,
            "--char", char, "--format", "json"]
    jit = subprocess.run(args, capture_output=True, text=True, timeout=300)
    pure = subprocess.run(args, capture_output=True, text=True, timeout=300,
                          env={"PERMSYM_PURE": "1", "PATH": "/usr/bin:/bin"})
    assert jit.returncode == 0 and pure.returncode == 0, (jit.stderr, pure.stderr)
    a = strip_timings(json.loads(jit.stdout))
    b = strip_timings(json.loads(pure.stdout))
    assert a == b


def test_cli_suite_unknown_key():
    proc = run_cli("suite", "--only", "not-a-criterion")
    assert proc.returncode == 2
    assert "unknown criteria" in proc.stderr
