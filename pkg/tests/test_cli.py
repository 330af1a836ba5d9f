import json

import pytest

from snake_atlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_q4(capsys):
    code, out, _ = run(capsys, "poly", "--which", "Q", "--n", "4")
    assert code == 0
    assert json.loads(out) == {"min_exp": 0, "coeffs": [5, 0, 28, 0, 24]}


def test_poly_q_analogue(capsys):
    code, out, _ = run(capsys, "poly", "--which", "R", "--n", "2", "--q")
    assert code == 0
    assert json.loads(out) == {"t": [[1, 1], [], [1, 2, 2, 1]]}


def test_zeta2_worked_example(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "zeta2",
                       "--input", "[4,-2,1,3,8,5,9,-7,6]")
    assert code == 0
    assert json.loads(out) == [3, -1, 2, 4, 7, 5, 8, -6]


def test_arnold_csv_matches_table_layout(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "arnold", "--n", "6",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[1:] == ["-6", "-5", "-4", "-3", "-2", "-1",
                                       "1", "2", "3", "4", "5", "6"]
    assert lines[6] == "6,0,80,160,236,304,361,361,418,464,496,512,512"


def test_triangle_json_row(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "entringer", "--n", "4")
    assert code == 0
    obj = json.loads(out)
    assert [r["value"] for r in obj["rows"]] == [0, 1, 2, 2]


def test_family_listing(capsys):
    code, out, _ = run(capsys, "family", "--name", "rsi-d", "--n", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 5
    assert [1, 2, -3] in obj["members"]


def test_family_anchor(capsys):
    code, out, _ = run(capsys, "family", "--name", "snakes", "--n", "3",
                       "--anchor", "first", "--value", "2")
    assert json.loads(out)["count"] == 4


def test_bijection_inverse_direction(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "gamma",
                       "--direction", "inverse", "--input", "[4,-2,5,-3,-1]")
    assert code == 0
    assert json.loads(out) == [5, 3, "e", 1, "e", 4, "e", 2, "e"]


def test_bijection_trace(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "phi1", "--trace",
                       "--input", "[1]")
    assert code == 0
    obj = json.loads(out)
    assert "result" in obj and "trace" in obj
    assert obj["trace"][0][0] == "i"


def test_psi_maps_via_cli(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "psi-cap", "--input", "[1]")
    assert code == 0
    assert json.loads(out) == ["e", 1, "e"]


def test_exit_codes(capsys):
    assert run(capsys, "family", "--name", "snakes", "--n", "99")[0] == 3
    assert run(capsys, "bijection", "--name", "phi1", "--input", "[3,2,1]")[0] == 5
    assert run(capsys, "bijection", "--name", "phi1", "--input", "[3,2,")[0] == 4
    with pytest.raises(SystemExit) as exc:
        run(capsys, "family", "--name", "bogus", "--n", "3")
    assert exc.value.code == 2


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "--check", "eq-1", "--n-max", "6")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["check_id"] == "eq-1" and reports[0]["status"] == "pass"


def test_output_is_byte_stable(capsys):
    a = run(capsys, "family", "--name", "rsii-b", "--n", "3")
    b = run(capsys, "family", "--name", "rsii-b", "--n", "3")
    assert a == b
