"""
Tests for report rendering and engine configuration
"""

import json

import pytest

from src.constants.sentinels import INFINITY, AtLeast
from src.models import BallExpr, BoundReport, HypothesisStatus, InvariantValues
from src.utils.config import get_config
from src.utils.report_utils import render_report, to_payload


def _report(**updates):
    fields = dict(
        ring="QQ[x, y]/(x^2 - y^3)",
        field="QQ",
        ideal="jac(R) = (y^2, x)",
        invariants=InvariantValues(mu=2, grade=1, depth=1, dim=1, quotient_dim=0, loewy=2),
        hypotheses=[HypothesisStatus(name="artinian-quotient", status="verified", evidence="dim R/I = 0")],
        ball=BallExpr(category="D_sg", generator=["k"], radius=4, provenance=["liu: (2 - 1 + 1)·2 = 4"]),
        dim_bound=3,
        formula="liu",
        conditional_formula="D_sg(R) = <k>_4",
        warnings=["example warning"],
    )
    fields.update(updates)
    return BoundReport(**fields)


def test_sentinels_become_strings():
    payload = to_payload({"loewy": INFINITY, "n": AtLeast(16), "pair": (1, 2)})
    assert payload == {"loewy": "infinity", "n": ">= 16", "pair": [1, 2]}


def test_floats_are_refused():
    with pytest.raises(TypeError):
        to_payload({"radius": 1.5})


def test_json_is_canonical():
    text = render_report(_report(), "json")
    data = json.loads(text)
    assert data["dim_bound"] == 3
    assert list(data) == sorted(data)
    assert "⚠" not in text
    assert text == render_report(_report(), "json")


def test_text_report_layout():
    text = render_report(_report(), "text")
    assert text.splitlines()[0].startswith("ring:")
    assert "ball: D_sg(R) = <k>_4" in text
    assert "  1. liu: (2 - 1 + 1)·2 = 4" in text
    assert "dim D_sg(R) <= 3" in text
    assert "⚠ example warning" in text


def test_conditional_text_report():
    text = render_report(_report(ball=None, dim_bound=None), "text")
    assert "ball: -" in text
    assert "conditional" in text


def test_plain_payload_rendering():
    text = render_report({"ring": "R", "unit": True, "betti": [1, 3, 2], "nested": {"a": None}}, "text")
    assert "unit:  yes" in text
    assert "betti: 1, 3, 2" in text
    assert "nested:" in text
    assert "  a: -" in text


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report({}, "yaml")


def test_config_defaults_and_overrides(monkeypatch):
    for name in (
        "DSG_MAX_BASIS", "DSG_MAX_STEPS", "DSG_NILPOTENCY_CAP", "DSG_RESOLUTION_CAP", "DSG_SATURATION_CAP", "DSG_VERBOSE",
    ):
        monkeypatch.delenv(name, raising=False)
    config = get_config()
    assert config.nilpotency_cap == 16
    assert config.max_basis_size == 2000
    assert config.saturation_cap == config.resolution_length_cap == 32
    assert not config.verbose
    assert get_config(nilpotency_cap=3, verbose=None).nilpotency_cap == 3


def test_config_reads_the_environment(monkeypatch):
    monkeypatch.setenv("DSG_NILPOTENCY_CAP", "5")
    monkeypatch.setenv("DSG_VERBOSE", "TRUE")
    config = get_config()
    assert config.nilpotency_cap == 5
    assert config.verbose


@pytest.mark.parametrize("value", ["zero", "0", "-3"])
def test_config_rejects_bad_environment_values(monkeypatch, value):
    monkeypatch.setenv("DSG_MAX_STEPS", value)
    with pytest.raises(ValueError, match="DSG_MAX_STEPS"):
        get_config()
