"""End-to-end CLI behaviour: output formats, determinism, exit codes."""

import json

from polarlink.cli import main
from polarlink.report import oracle_degree_cap


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def compute_doc(capsys, *extra):
    code, out, err = run_cli(capsys, "compute", *extra)
    return code, json.loads(out), err


def test_compute_two_lines_stdout(capsys):
    code, doc, _ = compute_doc(
        capsys, "--poly", "x*y", "--vars", "x,y", "--trials", "3"
    )
    assert code == 0
    assert doc["gamma"] == [0, 1, 1]
    assert doc["lambda"] == [1, 2]
    assert doc["mult"] == 2
    assert doc["s"] == 0
    assert doc["stability"]["stable"] is True
    assert doc["oracles"]["all_passed"] is True
    assert doc["chain_complex"]["ranks"] == [1, 2]
    assert doc["n1_exact_sequence"]["ranks"] == [None, 1, 2, None]


def test_compute_output_is_byte_identical(capsys):
    args = ("compute", "--poly", "x^2+y^3", "--vars", "x,y", "--trials", "3")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_compute_gamma_independent_of_seed(capsys):
    base = ("--poly", "x^3+y^3+z^3", "--vars", "x,y,z", "--trials", "3")
    _, doc0, _ = compute_doc(capsys, *base, "--seed", "0")
    _, doc9, _ = compute_doc(capsys, *base, "--seed", "99")
    assert doc0["gamma"] == doc9["gamma"] == [0, 4, 2, 1]
    assert doc0["lambda"] == doc9["lambda"]


def test_compute_json_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "report.json"
    args = ("compute", "--poly", "x*y", "--vars", "x,y", "--trials", "3")
    code, out, _ = run_cli(capsys, *args)
    code_f, out_f, _ = run_cli(capsys, *args, "--json", str(target))
    assert code == code_f == 0
    assert out_f == ""
    assert target.read_text(encoding="utf-8") == out


def test_text_rendering_carries_the_same_numbers(capsys):
    args = ("--poly", "x^3+y^3+z^3", "--vars", "x,y,z", "--trials", "3")
    _, doc, _ = compute_doc(capsys, *args)
    code, text, _ = run_cli(capsys, "compute", *args, "--text")
    assert code == 0
    assert f"gamma: {doc['gamma']}" in text
    assert f"lambda: {doc['lambda']}" in text
    for value in doc["gamma"] + doc["lambda"] + [doc["mult"], doc["s"]]:
        assert str(value) in text
    assert doc["poly_canonical"] in text


def test_betti_hypothesis_is_reported_not_fatal(capsys):
    base = ("--poly", "x*y", "--vars", "x,y", "--trials", "3")
    code, doc, _ = compute_doc(
        capsys, *base, "--betti", "1,2", "--components", "2"
    )
    assert code == 0
    assert doc["feasibility"]["all_passed"] is True
    assert doc["input"]["betti_source"] == "user-supplied"

    code, doc, _ = compute_doc(capsys, *base, "--betti", "2,3")
    assert code == 0
    assert doc["feasibility"]["all_passed"] is False
    failed = {
        c["name"] for c in doc["feasibility"]["checks"] if not c["passed"]
    }
    assert "morse_family1_p0" in failed


def test_betti_of_wrong_length_is_an_input_error(capsys):
    code, doc, _ = compute_doc(
        capsys, "--poly", "x*y", "--vars", "x,y", "--betti", "1,2,3"
    )
    assert code == 1
    assert doc["error"]["kind"] == "input"


def test_betti_must_be_integers(capsys):
    code, out, err = run_cli(
        capsys, "compute", "--poly", "x*y", "--vars", "x,y", "--betti", "1,a"
    )
    assert code == 1
    assert "integers" in err


def test_excluded_inputs_exit_3_with_distinct_reasons(capsys):
    reasons = {}
    for poly in ("x + 1", "x", "0"):
        code, doc, _ = compute_doc(capsys, "--poly", poly, "--vars", "x,y")
        assert code == 3
        assert doc["error"]["kind"] == "excluded"
        assert "gamma" not in doc
        assert "mult" not in doc
        reasons[poly] = doc["error"]["reason"]
    assert len(set(reasons.values())) == 3


def test_parse_error_exits_1(capsys):
    code, doc, _ = compute_doc(capsys, "--poly", "2x", "--vars", "x,y")
    assert code == 1
    assert doc["error"]["kind"] == "input"


def test_unknown_flag_exits_1(capsys):
    code, _, err = run_cli(capsys, "compute", "--poly", "x*y", "--nope")
    assert code == 1
    assert err != ""


def test_version_flag_exits_0(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0


def test_corpus_bundled_all_audits_pass(capsys):
    code, out, _ = run_cli(capsys, "corpus", "--trials", "3")
    assert code == 0
    assert "all audits passed" in out
    assert "two-lines" in out
    assert "FAIL" not in out
    assert "betti-INFEASIBLE" not in out


def test_corpus_bad_json_names_the_line(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text(
        '{"name": "ok", "poly": "x*y", "vars": ["x", "y"]}\n{oops\n',
        encoding="utf-8",
    )
    code, out, _ = run_cli(capsys, "corpus", str(path))
    assert code == 1
    assert "line 2" in out


def test_corpus_missing_fields_rejected(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('{"name": "halfbaked", "poly": "x*y"}\n', encoding="utf-8")
    code, out, _ = run_cli(capsys, "corpus", str(path))
    assert code == 1
    assert "line 1" in out


def test_corpus_empty_file_passes_vacuously(capsys, tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("\n\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "corpus", str(path))
    assert code == 0
    assert "0 entries" in out


def test_corpus_gamma_mismatch_fails_audit(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    entry = {
        "name": "wrong-expectation",
        "poly": "x*y",
        "vars": ["x", "y"],
        "expect_gamma": [0, 5, 1],
    }
    path.write_text(json.dumps(entry) + "\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "corpus", str(path), "--trials", "3")
    assert code == 2
    assert "expect_gamma" in out


def test_corpus_excluded_entries_are_listed_not_failed(capsys, tmp_path):
    path = tmp_path / "c.jsonl"
    entry = {"name": "unit-at-origin", "poly": "x + 1", "vars": ["x", "y"]}
    path.write_text(json.dumps(entry) + "\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "corpus", str(path))
    assert code == 0
    assert "excluded" in out


def test_oracle_truncated_colength_stable(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "truncated-colength", "--gens", "x; y^2", "--vars", "x,y"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {"value": 2, "stable": True, "cap": payload["cap"]}


def test_oracle_truncated_colength_unstable_exits_2(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "truncated-colength", "--gens", "x*y", "--vars", "x,y"
    )
    assert code == 2
    assert json.loads(out)["stable"] is False


def test_oracle_truncated_colength_bad_input(capsys):
    code, _, err = run_cli(
        capsys, "oracle", "truncated-colength", "--gens", "x +", "--vars", "x,y"
    )
    assert code == 1
    assert err != ""


def test_oracle_teissier_cusp(capsys):
    code, out, _ = run_cli(
        capsys,
        "oracle", "teissier",
        "--poly", "x^2+y^3", "--vars", "x,y", "--frames", "2",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["checks"]) == 2
    assert all(c["passed"] for c in payload["checks"])


def test_oracle_teissier_needs_isolated_singularity(capsys):
    code, out, err = run_cli(
        capsys,
        "oracle", "teissier",
        "--poly", "y^2 - x^2*z", "--vars", "x,y,z", "--frames", "1",
    )
    assert code == 2
    assert "usable frames" in err


def test_oracle_teissier_excluded_input(capsys):
    code, _, err = run_cli(
        capsys, "oracle", "teissier", "--poly", "x + 1", "--vars", "x,y"
    )
    assert code == 3


def test_degree_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("POLARLINK_MAX_DEGREE", "4")
    assert oracle_degree_cap() == 4
    # a cap too small to see the colength stabilize turns into exit 2
    code, out, _ = run_cli(
        capsys,
        "oracle", "truncated-colength",
        "--gens", "x^9; y", "--vars", "x,y", "--cap", "2",
    )
    assert code == 2
    monkeypatch.delenv("POLARLINK_MAX_DEGREE")
    code, out, _ = run_cli(
        capsys,
        "oracle", "truncated-colength",
        "--gens", "x^9; y", "--vars", "x,y", "--cap", "2",
    )
    assert code == 0
    assert json.loads(out)["value"] == 9


def test_module_entry_point_runs():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "polarlink", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
