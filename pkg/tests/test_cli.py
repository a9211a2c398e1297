import json

import pytest

from superschur.catalog import data_path
from superschur.cli import main

BROKEN = """\
superalgebra broken
even e1
odd f1
[f1, f1] = e1
[e1, f1] = f1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_multiplier_catalog_json(capsys):
    code, out, _ = run(capsys, "multiplier", "--catalog", "(2|3)_22", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dimMultiplier"] == 3


def test_multiplier_human(capsys):
    code, out, _ = run(capsys, "multiplier", "--catalog", "(2|2)_1")
    assert code == 0
    assert "dim multiplier" in out and " 1" in out


def test_capability_catalog(capsys):
    code, out, _ = run(capsys, "capability", "--catalog", "(3|2)_13")
    assert code == 0
    assert "capable" in out and "true" in out


def test_capability_json_capable_flag(capsys):
    code, out, _ = run(capsys, "capability", "--catalog", "(2|3)_23", "--json")
    assert code == 0
    assert json.loads(out)["capable"] is False


def test_gamma_catalog(capsys):
    code, out, _ = run(capsys, "gamma", "--catalog", "(3|2)_13", "--json")
    assert code == 0
    assert json.loads(out)["gamma"] == 2


def test_validate_good_file(capsys):
    path = str(data_path("(2|3)_22"))
    code, out, _ = run(capsys, "validate", path)
    assert code == 0 and "ok" in out


def test_validate_broken_file(tmp_path, capsys):
    f = tmp_path / "broken.lsa"
    f.write_text(BROKEN, encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(f))
    assert code == 1
    assert "INVALID" in out
    assert "f1" in out  # the Jacobi witness triple is printed


def test_validate_multiple_files(tmp_path, capsys):
    f = tmp_path / "broken.lsa"
    f.write_text(BROKEN, encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(data_path("(2|2)_1")), str(f))
    assert code == 1


def test_invariants(capsys):
    path = str(data_path("(1|3)_1"))
    code, out, _ = run(capsys, "invariants", path)
    assert code == 0
    assert "(1|3)" in out and "nilpotent" in out


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    assert len(out.strip().splitlines()) == 11
    code, out, _ = run(capsys, "catalog", "--tag", "gamma2-list")
    assert len(out.strip().splitlines()) == 5


def test_unknown_catalog_name_exits_1(capsys):
    code, _, err = run(capsys, "multiplier", "--catalog", "bogus")
    assert code == 1 and "bogus" in err


def test_syntax_error_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.lsa"
    f.write_text("not a presentation\n", encoding="utf-8")
    code, _, err = run(capsys, "validate", str(f))
    assert code == 2 and "error" in err


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["multiplier", "--nonsense"])
    assert exc.value.code == 2


def test_verify_table1(capsys):
    code, out, _ = run(capsys, "verify-table1")
    assert code == 0
    assert out.count("pass") == 11
    assert "finding" in out


def test_verify_table1_json(capsys):
    code, out, _ = run(capsys, "verify-table1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["rows"]) == 11
    assert {f["claim"] for f in doc["findings"]} == {"Table1", "Thm2.6(iii)"}


def test_scan_small(capsys):
    code, out, _ = run(capsys, "scan", "--samples", "15", "--seed", "5")
    assert code == 0
    assert "findings              0" in out


def test_scan_json_deterministic(capsys):
    code, a, _ = run(capsys, "scan", "--samples", "10", "--seed", "3", "--json")
    assert code == 0
    code, b, _ = run(capsys, "scan", "--samples", "10", "--seed", "3", "--json")
    assert json.loads(a)["findings"] == json.loads(b)["findings"]


def test_field_override(capsys):
    code, out, _ = run(capsys, "multiplier", "--catalog", "(2|2)_4",
                       "--field", "F5", "--json")
    assert code == 0
    assert json.loads(out)["dimMultiplier"] == 2


def test_gamma_from_file(capsys):
    code, out, _ = run(capsys, "gamma", str(data_path("(2|3)_22")), "--json")
    assert code == 0
    assert json.loads(out)["gamma"] == 3
