"""
Tests for the dsg-bound command line
"""

import io
import json

import pytest

from src.cli import build_parser, run_command


def _run(argv):
    out = io.StringIO()
    code = run_command(argv, stdout=out)
    return code, out.getvalue()


def _run_json(argv):
    code, text = _run(argv + ["--format", "json"])
    return code, json.loads(text)


@pytest.fixture
def plane_file(tmp_path):
    path = tmp_path / "plane.ring"
    path.write_text("field QQ\nvars x y\n", encoding="utf-8")
    return str(path)


def test_bound_for_dim41(ring_path):
    code, report = _run_json(["bound", "--input", ring_path("dim41"), "--attest", "half-cm-local"])
    assert code == 0
    assert report["dim_bound"] == 41
    assert report["ball"]["radius"] == 42
    assert report["attestations"] == ["half-cm-local"]


def test_bound_without_attestation_exits_one(ring_path):
    code, text = _run(["bound", "--input", ring_path("dim41")])
    assert code == 1
    assert "conditional, no numeric bound" in text
    assert "half-cohen-macaulay" in text


def test_bound_text_report_for_coordinate_axes(ring_path):
    code, text = _run(["bound", "--input", ring_path("egdimsing1"), "--formula", "dimsing1"])
    assert code == 0
    assert "dim D_sg(R) <= 11" in text
    assert "invariants:" in text


def test_depth_zero_bound(ring_path):
    code, report = _run_json(["bound", "--input", ring_path("depth_zero_n4"), "--formula", "depth-zero"])
    assert code == 0
    assert report["dim_bound"] == 5


def test_output_is_deterministic(ring_path):
    argv = ["bound", "--input", ring_path("dual_numbers"), "--formula", "liu", "--format", "json"]
    assert _run(argv) == _run(argv)


def test_gb_of_the_unit_ideal(ring_path):
    code, payload = _run_json(["gb", "--input", ring_path("dual_numbers"), "--ideal", "1"])
    assert code == 0
    assert payload["basis"] == ["1"]
    assert payload["unit"] is True


def test_gb_without_ideal_is_the_relation_basis(ring_path):
    code, payload = _run_json(["gb", "--input", ring_path("uncountable_cm")])
    assert code == 0
    assert payload["size"] == 1


def test_normal_form(ring_path):
    code, payload = _run_json(
        ["nf", "--input", ring_path("dual_numbers"), "--ideal", "x, y^2", "--poly", "x*y + y^3 + y"]
    )
    assert code == 0
    assert payload["normal_form"] == "y"
    assert payload["member"] is False


def test_invariants_report(ring_path):
    code, payload = _run_json(["invariants", "--input", ring_path("egdimsing1")])
    assert code == 0
    invariants = payload["invariants"]
    assert (invariants["mu"], invariants["grade"], invariants["depth"]) == (3, 1, 2)
    assert invariants["loewy"] == "infinity"
    assert payload["nilradical"] == "(x, y, z)"
    assert payload["nilradical_status"] == "verified"


def test_invariants_with_radical_candidates(ring_path):
    code, payload = _run_json(
        ["invariants", "--input", ring_path("uncountable_cm"), "--radical", "x, y"]
    )
    assert code == 0
    assert payload["invariants"]["nilpotency"] == 4


def test_jacobian_command(ring_path):
    code, payload = _run_json(["jacobian", "--input", ring_path("dual_numbers")])
    assert code == 0
    assert payload["h"] == 1
    assert sorted(payload["generators"]) == ["x", "y^2"]


def test_verify_exit_codes(ring_path):
    code, _ = _run(["verify", "--input", ring_path("dim41")])
    assert code == 1
    code, payload = _run_json(["verify", "--input", ring_path("dim41"), "--attest", "half-cm-local"])
    assert code == 0
    assert {h["status"] for h in payload["hypotheses"]} <= {"verified", "attested"}


def test_resolve_command(ring_path):
    code, payload = _run_json(["resolve", "--input", ring_path("dual_numbers")])
    assert code == 0
    assert payload["betti"] == [1, 1]
    assert payload["depth"] == 1


def test_workflow_command():
    code, text = _run(["workflow"])
    assert code == 0
    assert "build_derived_ball" in text


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bound"],
        ["bound", "--input", "x.ring", "--formula", "bogus"],
        ["bound", "--input", "x.ring", "--cap", "0"],
        ["bound", "--input", "x.ring", "--formula", "main-radius", "--mod-radius", "-1"],
        ["bound", "--input", "x.ring", "--formula", "dimsing1", "--t-loewy", "-1"],
    ],
)
def test_usage_errors_exit_two(argv):
    assert run_command(argv, stdout=io.StringIO()) == 2


def test_missing_ring_file_is_a_parse_error(tmp_path):
    code, _ = _run(["gb", "--input", str(tmp_path / "missing.ring")])
    assert code == 2


def test_malformed_polynomial_is_a_parse_error(ring_path):
    code, _ = _run(["nf", "--input", ring_path("dual_numbers"), "--poly", "x^"])
    assert code == 2


def test_regular_ring_is_unsupported(plane_file):
    assert _run(["bound", "--input", plane_file])[0] == 3


def test_unknown_attestation_is_unsupported(ring_path):
    code, _ = _run(["bound", "--input", ring_path("dim41"), "--attest", "half-cm"])
    assert code == 3


def test_main_radius_without_radius_is_unsupported(ring_path):
    code, _ = _run(["bound", "--input", ring_path("egdimsing1"), "--formula", "main-radius"])
    assert code == 3


def test_resource_cap_exit_code(ring_path, monkeypatch):
    monkeypatch.setenv("DSG_MAX_BASIS", "1")
    code, _ = _run(["gb", "--input", ring_path("dim41"), "--ideal", "x, y"])
    assert code == 4


def test_bad_environment_value(ring_path, monkeypatch):
    monkeypatch.setenv("DSG_NILPOTENCY_CAP", "many")
    code, _ = _run(["gb", "--input", ring_path("dual_numbers")])
    assert code == 2


def test_help_lists_attestations():
    text = build_parser().format_help()
    assert "half-cm-local" in text


def test_invariants_of_an_artinian_ring(tmp_path):
    path = tmp_path / "ci.ring"
    path.write_text("field GF 7\nvars x y\nrelations\nx^2\ny^2\nend\n", encoding="utf-8")
    code, payload = _run_json(["invariants", "--input", str(path)])
    assert code == 0
    assert payload["field"] == "GF 7"
    assert payload["artinian"] == {"loewy_length": 3, "socle": ["x*y"], "type": 1}


def test_json_failures_are_machine_readable(ring_path, monkeypatch):
    code, payload = _run_json(["nf", "--input", ring_path("dual_numbers"), "--poly", "x^"])
    assert code == 2
    assert payload["error"] == "parse_error"
    monkeypatch.setenv("DSG_MAX_BASIS", "1")
    code, payload = _run_json(["gb", "--input", ring_path("dim41"), "--ideal", "x, y"])
    assert code == 4
    assert payload == {"error": "resource_cap", "message": payload["message"], "details": {"cap": 1}}
