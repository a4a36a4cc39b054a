import json
import os

import pytest

from zetalab.cli import main

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fx(name):
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_scheme_p1(capsys):
    code, report = run_json(capsys, "zeta-scheme", fx("p1_f2.json"), "--terms", "6")
    assert code == 0
    assert report["counts"] == [3, 5, 9, 17, 33, 65]
    assert report["euler_characteristic"] == 2
    assert report["functional_equation_sign"] == 1
    assert report["rational"]["den"] == ["1", "-3", "2"]


def test_lattice_a2(capsys):
    code, report = run_json(capsys, "lattice", fx("a2_quiver.json"))
    assert code == 0
    assert report["left_kernel_rank"] == 0
    assert report["right_kernel_rank"] == 0
    assert report["kernels_agree"] is True
    assert report["quotient_rank"] == 2


def test_lattice_disagreement_exits_2(capsys):
    code, report = run_json(capsys, "lattice", fx("kernel_disagree.json"))
    assert code == 2
    assert report["kernels_agree"] is False


def test_missing_file_names_path(capsys):
    code = main(["lattice", "no_such_file.json"])
    err = capsys.readouterr().err
    assert code == 1
    assert "no_such_file.json" in err


def test_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["lattice", str(bad)]) == 1


def test_schema_violation_names_field(tmp_path, capsys):
    f = tmp_path / "lat.json"
    f.write_text(json.dumps({"rank": 3, "gram": [[1, 0], [0, 1]]}))
    code = main(["lattice", str(f)])
    err = capsys.readouterr().err
    assert code == 1
    assert "rank" in err


def test_zeta_realize_p1(capsys):
    code, report = run_json(capsys, "zeta-realize", fx("p1_realization.json"))
    assert code == 0
    assert report["degree_gap"] == 2
    assert report["trace_of_identity"] == 2
    assert report["series"][:3] == ["1", "3", "7"]
    assert report["functional_equation"]["holds"] is True


def test_zeta_realize_elliptic(capsys):
    code, report = run_json(capsys, "zeta-realize", fx("elliptic_realization.json"))
    assert code == 0
    assert report["degree_gap"] == 0
    assert report["rational"]["num"] == ["1", "3", "5"]


def test_check_functional(capsys):
    code, report = run_json(capsys, "check-functional", fx("p1_realization.json"))
    assert code == 0
    assert report["holds"] is True
    assert report["det"] == "2"


def test_zeta_det_blocks(capsys):
    code, report = run_json(capsys, "zeta-det", fx("blocks_p1.json"))
    assert code == 0
    assert report["det"] == "5"


def test_witt_add(capsys):
    code, report = run_json(capsys, "witt", fx("witt_example.json"))
    assert code == 0
    # 1/(1-t) * 1/(1-2t) expanded
    assert report["result"] == ["1", "3", "7", "15", "31"]


def test_cross_check_p1(capsys):
    code, report = run_json(
        capsys, "check", fx("p1_realization.json"), fx("p1_f2.json"), "--precision", "6"
    )
    assert code == 0
    assert report["match"] is True


def test_cross_check_elliptic(capsys):
    code, report = run_json(
        capsys,
        "check",
        fx("elliptic_realization.json"),
        fx("elliptic_f5.json"),
        "--precision",
        "4",
    )
    assert code == 0
    assert report["match"] is True


def test_cross_check_mismatch_exits_2(capsys):
    code, report = run_json(
        capsys, "check", fx("p1_realization.json"), fx("elliptic_f5.json"), "--precision", "4"
    )
    assert code == 2
    assert report["match"] is False


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_BUDGET", "5")
    code = main(["zeta-scheme", fx("p1_f2.json"), "--terms", "4"])
    err = capsys.readouterr().err
    assert code == 1
    assert "budget" in err


def test_report_roundtrips(capsys):
    code, out = run(capsys, "zeta-scheme", fx("p1_f2.json"), "--terms", "6")
    report = json.loads(out)
    assert json.loads(json.dumps(report)) == report


def test_table_output(capsys):
    code, out = run(capsys, "--output", "table", "lattice", fx("a2_quiver.json"))
    assert code == 0
    assert "kernels_agree: True" in out


def test_scheme_workers_flag(capsys):
    code, report = run_json(
        capsys, "zeta-scheme", fx("p1_f2.json"), "--terms", "4", "--workers", "2"
    )
    assert code == 0
    assert report["counts"] == [3, 5, 9, 17]
