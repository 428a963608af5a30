import pytest

from swcalc.demo import SECTIONS, run_demo
from swcalc.errors import InvalidParameterError


@pytest.mark.parametrize("section", sorted(SECTIONS))
def test_every_check_passes(section):
    report = run_demo(section)
    failed = [(c.claim, c.expected, c.computed) for c in report.checks if not c.passed]
    assert report.checks
    assert not failed


def test_report_text():
    text = run_demo("geography").render_text()
    assert text.startswith("== geography ==")
    assert "checks passed" in text.splitlines()[-1]


def test_unknown_section():
    with pytest.raises(InvalidParameterError, match="unknown demo section"):
        run_demo("everything")


def test_enumeration_limit_comes_from_config(monkeypatch):
    monkeypatch.setenv("SWCALC_ENUMERATION_LIMIT", "1")
    report = run_demo("construction1")
    assert any("over the limit of 1" in c.computed for c in report.checks)
    assert not report.passed
