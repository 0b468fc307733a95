from __future__ import annotations

import json

import pytest

import cayleysg as c
from cayleysg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_family(capsys):
    code, out, _ = run(capsys, "classify", "family:example_ijkf")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_left_zero"] is True
    assert payload["is_trivial"] is False
    assert payload["is_finite"] is True
    assert payload["witnesses"]["minimal_ideal"] == [1, 2, 3]


def test_classify_from_file(capsys, tmp_path):
    path = tmp_path / "table.txt"
    path.write_text(c.format_table(c.right_zero(3)))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert json.loads(out)["is_trivial"] is True


def test_classify_family_with_params(capsys):
    code, out, _ = run(capsys, "classify", "family:cyclic_group:3")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_free"] is True and payload["free_rank"] == 3

    code, out, _ = run(capsys, "classify", "family:rectangular_band:2,3")
    assert code == 0
    assert json.loads(out)["is_right_zero"] is True


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 9\n1 2\n")
    code, _, err = run(capsys, "classify", str(path))
    assert code == 2
    assert "out of range" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "classify", "no-such-file.txt")
    assert code == 2
    assert "cannot read" in err


def test_unknown_family_exit_code(capsys):
    code, _, err = run(capsys, "classify", "family:octonions")
    assert code == 2
    assert "unknown family" in err


def test_bad_family_params_exit_code(capsys):
    code, _, err = run(capsys, "classify", "family:cyclic_group:x")
    assert code == 2
    code, _, err = run(capsys, "classify", "family:cyclic_group:1,2,3")
    assert code == 2


def test_associativity_error_exit_code_and_triple(capsys, tmp_path):
    path = tmp_path / "nonassoc.txt"
    path.write_text("2\n2 1\n1 1\n")
    code, _, err = run(capsys, "classify", str(path))
    assert code == 3
    assert "a=1, b=1, c=2" in err


def test_machine_dot_output(capsys, tmp_path):
    out_path = tmp_path / "m.dot"
    code, _, _ = run(capsys, "machine", "family:left_zero:1", "--dot", str(out_path))
    assert code == 0
    assert out_path.read_text() == (
        'digraph mealy {\n'
        '  rankdir=LR;\n'
        '  node [shape=circle];\n'
        '  s0 [label="1"];\n'
        '  s0 -> s0 [label="1|1"];\n'
        '}\n'
    )


def test_machine_dot_stdout_and_stability(capsys):
    code, first, _ = run(capsys, "machine", "family:example_ijkf")
    assert code == 0
    code, second, _ = run(capsys, "machine", "family:example_ijkf")
    assert first == second
    assert '"f|j"' in first


def test_enumerate_closed_payload(capsys):
    code, out, _ = run(capsys, "enumerate", "family:example_ijkf", "--budget", "50")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "status": "Closed",
        "element_count": 2,
        "cayley": [[1, 1], [2, 2]],
        "generator_map": [1, 1, 2, 1],
    }


def test_enumerate_exceeded_payload(capsys):
    code, out, _ = run(capsys, "enumerate", "family:cyclic_group:2", "--budget", "100")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"status": "Exceeded", "count_reached": 101, "capped": False}


def test_enumerate_budget_too_small(capsys):
    code, _, err = run(capsys, "enumerate", "family:cyclic_group:3", "--budget", "2")
    assert code == 2
    assert "budget" in err


def test_act_output_is_one_based(capsys, tmp_path):
    path = tmp_path / "rz3.txt"
    path.write_text(c.format_table(c.right_zero(3)))
    code, out, _ = run(capsys, "act", str(path), "--word", "2", "--prefix", "3,1,2")
    assert code == 0
    assert out == "3,1,2\n"


def test_act_empty_prefix(capsys):
    code, out, _ = run(capsys, "act", "family:cyclic_group:2", "--word", "2", "--prefix", "")
    assert code == 0
    assert out == "\n"


def test_act_validation(capsys):
    code, _, err = run(capsys, "act", "family:cyclic_group:2", "--word", "9", "--prefix", "1")
    assert code == 2
    code, _, err = run(capsys, "act", "family:cyclic_group:2", "--word", "", "--prefix", "1")
    assert code == 2
    code, _, err = run(capsys, "act", "family:cyclic_group:2", "--word", "0", "--prefix", "1")
    assert code == 2


def test_verify_clean_run(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["disagreements"] == []
    assert payload["inconclusive"] == []
    assert payload["tables_checked"] == 5


def test_verify_report_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--max-order", "1", "--out", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["tables_checked"] == 1
    assert "checked 1 tables" in out


def test_corpus_dump(capsys):
    code, out, _ = run(capsys, "corpus", "--order", "2", "--dedup", "labeled")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert lines[0] == "2;1 1;1 1"
    assert all(c.load_dump_line(line).order == 2 for line in lines)


def test_act_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("2\n1 2\n2 1\n"))
    code, out, _ = run(capsys, "act", "-", "--word", "2", "--prefix", "1,1,1")
    assert code == 0
    assert out == "2,2,2\n"
