import io
import json
import subprocess
import sys

import pytest

from coincidence.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_index_cubic():
    code, text = run("index", "--structure", "Z3", "--quaternion", "(0,1,1,1)")
    rec = json.loads(text)
    assert code == 0
    assert rec["sigma"] == 3 and rec["denominator"] == "3"
    assert rec["axis"] == ["1", "1", "1"] and rec["cos_angle"] == "-1"
    assert "csl_basis" in rec and rec["method"] == "closed-form"


def test_index_identity_and_oracle():
    code, text = run("index", "--structure", "Z2", "--matrix", "1,0;0,1", "--oracle")
    assert code == 0 and json.loads(text)["sigma"] == 1 and json.loads(text)["method"] == "oracle"


def test_index_infinite():
    code, text = run("index", "--structure", "Z2", "--matrix", "sqrt(2)/2,-sqrt(2)/2;sqrt(2)/2,sqrt(2)/2")
    assert code == 3 and json.loads(text)["sigma"] == "infinite"


@pytest.mark.parametrize("argv", [
    ["index", "--structure", "Z2", "--matrix", "1,2;3"],
    ["index", "--structure", "Z3", "--quaternion", "(1,2)"],
    ["index", "--structure", "Q7", "--matrix", "1,0;0,1"],
    ["index", "--structure", "Z2"],
    ["index", "--structure", "Z2", "--matrix", "1,1;0,1"],
])
def test_parse_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--structure", "Z3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_enumerate_square_identity_shell():
    code, text = run("enumerate", "--structure", "Z2", "--max", "1")
    lines = text.strip().splitlines()
    assert code == 0 and lines[0] == "sigma,rotation" and len(lines) == 5


def test_enumerate_cap_and_resume(capsys):
    code, text = run("enumerate", "--structure", "Z3", "--max", "5", "--cap", "30")
    assert code == 4
    assert "resume-token: Z3@3" in capsys.readouterr().err
    code, rest = run("enumerate", "--structure", "Z3", "--max", "5", "--resume", "Z3@3")
    _, full = run("enumerate", "--structure", "Z3", "--max", "5")
    assert code == 0
    assert text.splitlines() + rest.splitlines()[1:] == full.splitlines()


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("COINCIDENCE_CAP", "10")
    assert run("enumerate", "--structure", "Z3", "--max", "3")[0] == 4
    monkeypatch.setenv("COINCIDENCE_CAP", "many")
    assert run("enumerate", "--structure", "Z3", "--max", "3")[0] == 2


def test_count_d4_row():
    code, text = run("count", "--structure", "D4", "--max", "23")
    rows = dict(tuple(map(int, line.split(","))) for line in text.strip().splitlines()[1:])
    assert code == 0
    assert [rows[m] for m in (3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23)] == [16, 36, 64, 168, 144, 196, 576, 324, 400, 1024, 576]
    assert rows[2] == 0


def test_count_json():
    code, text = run("count", "--structure", "tenfold", "--max", "11", "--format", "json")
    data = json.loads(text)
    assert data[-1] == {"m": 11, "f(m)": 4}


def test_verify_ok_and_threads():
    code, text = run("verify", "--structure", "Z3", "--max", "7", "--threads", "2")
    assert code == 0 and "MISMATCH" not in text
    assert run("verify", "--structure", "Z3", "--max", "7")[1] == text


def test_verify_reports_mismatch(monkeypatch, capsys):
    import coincidence.cli as cli
    bad = dict(cli.STRUCTURE_FUNCTION, Z2="cubic3")
    monkeypatch.setattr(cli, "STRUCTURE_FUNCTION", bad)
    code, _ = run("verify", "--structure", "Z2", "--max", "5")
    assert code == 1 and "first mismatch" in capsys.readouterr().err


def test_classify_z3_13():
    code, text = run("classify", "--structure", "Z3", "--sigma", "13")
    assert code == 0 and len(text.strip().splitlines()) - 1 >= 2


def test_hierarchy():
    code, text = run("hierarchy", "--max", "25", "--format", "json")
    assert json.loads(text)[24] == {"m": 25, "all": 31, "square": 3, "primitive_square": 2, "csl": 2}


def test_output_is_deterministic():
    a = run("enumerate", "--structure", "M10", "--max", "31")[1]
    b = run("enumerate", "--structure", "M10", "--max", "31")[1]
    assert a == b


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "coincidence.cli", "index", "--structure", "Z2",
                           "--matrix", "sqrt(2)/2,-sqrt(2)/2;sqrt(2)/2,sqrt(2)/2"],
                          capture_output=True, text=True)
    assert proc.returncode == 3 and '"sigma": "infinite"' in proc.stdout


def test_index_csv_format():
    code, text = run("index", "--structure", "Z3", "--quaternion", "(1,1,1,0)", "--format", "csv")
    assert code == 0
    rows = dict(line.split(",", 1) for line in text.strip().splitlines())
    assert rows["field"] == "value"
    assert rows["sigma"] == "3"
    assert rows["cos_angle"] == "-1/3"
