import json
from pathlib import Path

import pytest

from swcalc.cli import main, parse_range
from swcalc.errors import InvalidParameterError

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(autouse=True)
def _project_root(monkeypatch):
    monkeypatch.chdir(ROOT)
    monkeypatch.delenv("SWCALC_EXAMPLES", raising=False)


def test_eval_json(capsys):
    assert main(["eval", "expressions/z_m3_g1.json", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert (record["name"], record["e"], record["sign"]) == ("Z(3,1)", 240, -144)


def test_eval_looks_up_the_examples_directory(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("SWCALC_EXAMPLES", str(ROOT / "expressions"))
    monkeypatch.chdir(tmp_path)
    assert main(["eval", "unknot_surgery.json"]) == 0
    assert "E(2)" in capsys.readouterr().out


def test_missing_file_reports_an_error(capsys):
    assert main(["eval", "nowhere.json"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err
    assert "nowhere.json" in err


def test_chars_csv(capsys):
    assert main(["chars", "zprime_m2.json", "--format", "csv"]) == 0
    header, row = capsys.readouterr().out.strip().splitlines()
    assert header == "name,e,sign,chi,c1_squared,b1,b2_plus,b2_minus"
    assert ",5,16," in row


def test_seed_flag_accepts_only_none(capsys):
    assert main(["chars", "zprime_m2.json", "--seed", "none", "--format", "csv"]) == 0
    assert ",5,16," in capsys.readouterr().out
    with pytest.raises(SystemExit):
        main(["chars", "zprime_m2.json", "--seed", "7"])


def test_sw_text(capsys):
    assert main(["sw", "z_m3_g1.json"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("SW(Z(3,1)) = ")
    assert "max along C:" in out


def test_homeo(capsys):
    assert main(["homeo", "z_e3_g2.json", "zprime_e3_g2.json"]) == 0
    assert "verdict: homeomorphic" in capsys.readouterr().out


def test_taubes_json(capsys):
    assert main(["taubes", "zprime_m2.json", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["verdict"], data["coefficient"]) == ("obstructed", 3)


def test_geography_csv(capsys):
    assert main(["geography", "--m-range", "3..3", "--g-range", "1..2", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == [
        "m,g,chi,c1sq,verdict,restricted,closed_form,agree",
        "3,1,24,48,excluded,True,True,True",
        "3,2,25,56,exception_B,False,False,True",
    ]


def test_geography_bad_range(capsys):
    assert main(["geography", "--m-range", "three"]) == 1
    assert "bad range" in capsys.readouterr().err


def test_basic_classes_json(capsys):
    assert main(["basic-classes", "--scenario", "Y2g", "--param", "g=3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "candidates"
    assert data["count"] == 2
    assert data["candidates"] == ["-4*tau - 2*Sigma", "4*tau + 2*Sigma"]


def test_basic_classes_vanishing_text(capsys):
    assert main(["basic-classes", "--scenario", "Yprime_neg1", "--param", "g=2", "--param", "L=1"]) == 0
    assert "SW vanishes" in capsys.readouterr().out


def test_basic_classes_from_expression_file(capsys):
    assert main(["basic-classes", "--scenario", "unknot_surgery.json", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["candidates"] == ["0"]


def test_lefschetz_json(capsys):
    assert main(["lefschetz", "--n", "2", "--g", "1", "--audit", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["enk_fibration"]["singular_fibers"] == 32
    assert data["vanishing_cycle_audit"]["total"] == 32
    assert data["twisted_fiber_sum"]["verdict"] == "consistent with E(2)_K"


def test_schema_out(tmp_path):
    target = tmp_path / "schema.json"
    assert main(["schema", "--out", str(target)]) == 0
    schema = json.loads(target.read_text())
    assert schema["title"] == "ManifoldExpr"
    assert schema["discriminator"]["propertyName"] == "op"


def test_demo_section(capsys):
    assert main(["demo", "lefschetz"]) == 0
    assert "== lefschetz ==" in capsys.readouterr().out


def test_parse_range():
    assert parse_range("3..6") == range(3, 7)
    assert parse_range("4") == range(4, 5)
    with pytest.raises(InvalidParameterError):
        parse_range("a..b")
