"""Command-line interface: output formats, round trips, exit codes."""

import json
import subprocess
import sys

from smallrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    with_flag = [argv[0], "--json"] + list(argv[1:])
    code, out, err = run(capsys, *with_flag)
    assert code == 0, err
    return json.loads(out)


def test_reduce_text(capsys):
    code, out, err = run(capsys, "reduce", "15", "27", "13")
    assert code == 0
    assert "reduced: (1, 1, 13)" in out


def test_classgroup_example(capsys):
    code, out, err = run(capsys, "classgroup", "--", "-100")
    assert code == 0
    assert "classes: 2" in out
    assert "S = (1, 0, 25)" in out
    assert "A = (2, 2, 13)" in out
    # the table shows A*A = S
    lines = [l.split() for l in out.splitlines() if l.startswith("A ")]
    table_row = [l for l in lines if l[0] == "A" and len(l) == 3]
    assert table_row and table_row[0][2] == "S"


def test_semigroup_example(capsys):
    code, out, err = run(capsys, "semigroup", "--", "-100")
    assert code == 0
    assert "classes: 3" in out
    assert "(not invertible)" in out
    # absorbing row: B B B
    rows = [l.split() for l in out.splitlines()]
    b_row = [r for r in rows if r and r[0] == "B" and len(r) == 4]
    assert b_row and b_row[0][1:] == ["B", "B", "B"]


def test_resolvent_example(capsys, tmp_path):
    payload = {
        "A": ["0", "0", "0", "5", "0", "-5"],
        "B": ["0", "0", "0", "0", "1", "-1"],
    }
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(payload))
    code, out, err = run(capsys, "resolvent", str(path))
    assert code == 0
    assert "content: 5" in out
    assert "count:   6" in out
    data = run_json(capsys, "resolvent", str(path))
    assert data == {"content": "5", "count": "6", "form": ["0", "-25", "-5", "0"]}


def test_padic_count_example(capsys):
    code, out, err = run(capsys, "padic-count", "3", "4", "2", "2", "2")
    assert code == 0
    assert out.strip() == "3"
    data = run_json(capsys, "padic-count", "3", "4", "2", "2", "2")
    assert data == {"count": "3"}


def test_form_ideal_round_trip(capsys, tmp_path):
    data = run_json(capsys, "form-ideal", "2", "2", "13")
    assert data["ring"] == {"t": "0", "u": "25"}
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(data))
    back = run_json(capsys, "ideal-form", str(path))
    assert back == {"form": ["2", "2", "13"]}


def test_cube_triple_round_trip(capsys, tmp_path):
    cube = ["1", "2", "2", "-1", "2", "-1", "-1", "-2"]
    data = run_json(capsys, "cube-triple", "--", *cube)
    path = tmp_path / "triple.json"
    path.write_text(json.dumps(data))
    back = run_json(capsys, "triple-cube", str(path))
    assert back == {"cube": cube}


def test_cubic_round_trip(capsys, tmp_path):
    data = run_json(capsys, "cubic-ring", "--", "1", "-3", "1", "2")
    path = tmp_path / "ring.json"
    path.write_text(json.dumps(data))
    back = run_json(capsys, "cubic-form", str(path))
    assert back == {"form": ["1", "-3", "1", "2"]}


def test_cube_commands(capsys):
    cube = ("--", "1", "2", "2", "-1", "2", "-1", "-1", "-2")
    data = run_json(capsys, "cube-forms", *cube)
    assert data == {"forms": [["5", "0", "5"]] * 3}
    data = run_json(capsys, "cube-ring", *cube)
    assert data == {"t": "-8", "u": "41"}


def test_compose_command(capsys):
    code, out, err = run(capsys, "compose", "--", "-23", "2", "1", "3", "2", "-1", "3")
    assert code == 0
    assert "(1, 1, 6)" in out


def test_quartic_ring_and_maximal(capsys, tmp_path):
    payload = {
        "A": ["0", "0", "0", "1", "0", "-1"],
        "B": ["0", "0", "0", "0", "1", "-1"],
    }
    path = tmp_path / "pz4.json"
    path.write_text(json.dumps(payload))
    data = run_json(capsys, "quartic-ring", str(path))
    assert data["c"]["11,1"] == "1"
    assert data["c"]["12,3"] == "0"
    assert len(data["c"]) == 24
    data = run_json(capsys, "maximal", str(path), "2", "3", "5")
    assert [r["maximal"] for r in data["results"]] == [True, True, True]
    assert all(r["witness"] is None for r in data["results"])

    scaled = {
        "A": ["0", "0", "0", "5", "0", "-5"],
        "B": ["0", "0", "0", "0", "1", "-1"],
    }
    path2 = tmp_path / "scaled.json"
    path2.write_text(json.dumps(scaled))
    data = run_json(capsys, "maximal", str(path2), "5")
    row = data["results"][0]
    assert row["maximal"] is False and row["tag"] == "d"
    assert row["witness"] is not None


def test_stella_command(capsys):
    code, out, err = run(capsys, "stella", "1", "1", "1", "1")
    assert code == 0
    assert "tetrahedron 1" in out
    data = run_json(capsys, "stella", "2", "0", "2", "2")
    assert data == {"inside": False, "tetrahedron": None}


def test_domain_error_exit_code(capsys):
    code, out, err = run(capsys, "compose", "--", "-24", "2", "1", "3", "2", "-1", "3")
    assert code == 1
    assert "DiscriminantMismatch" in err
    code, out, err = run(capsys, "padic-count", "3", "4", "2", "1", "2")
    assert code == 1
    assert "DomainError" in err
    code, out, err = run(capsys, "cube-ring", "0", "0", "0", "0", "0", "0", "0", "1")
    assert code == 1
    assert "Degenerate" in err


def test_usage_error_exit_code(capsys, tmp_path):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["reduce", "1", "2"]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    code, out, err = run(capsys, "ideal-form", str(bad))
    assert code == 2
    assert "usage error" in err
    missing_key = tmp_path / "missing.json"
    missing_key.write_text(json.dumps({"A": ["1"] * 6}))
    code, out, err = run(capsys, "resolvent", str(missing_key))
    assert code == 2


def test_stdin_input(capsys, monkeypatch):
    import io

    payload = json.dumps(
        {"A": ["0", "0", "0", "1", "0", "-1"], "B": ["0", "0", "0", "0", "1", "-1"]}
    )
    monkeypatch.setattr(sys, "stdin", io.StringIO(payload))
    code, out, err = run(capsys, "resolvent", "-")
    assert code == 0
    assert "content: 1" in out


def test_json_determinism(capsys):
    first = run_json(capsys, "classgroup", "--", "-23")
    second = run_json(capsys, "classgroup", "--", "-23")
    assert first == second
    assert first["structure"] == ["3"]


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "smallrank.cli", "classgroup", "--json", "--", "-23"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["structure"] == ["3"]
