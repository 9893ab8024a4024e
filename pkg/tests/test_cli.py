"""End-to-end CLI runs against golden files.

Regenerate the golden files with ``UPDATE_GOLDEN=1 pytest tests/test_cli.py``.
"""

import os
from pathlib import Path

import pytest

from idcodes.cli import main
from idcodes.report import RunReport, emit, parse

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("analyze_P5", ["analyze", "P5"]),
    ("analyze_K2", ["analyze", "K2"]),
    ("analyze_C9", ["analyze", "C9"]),
    ("twins_P3", ["twins", "P3"]),
    ("twins_K3", ["twins", "K3"]),
    ("twins_P4", ["twins", "P4"]),
    ("verify_P3_P4", ["verify", "P3", "P4", "--oracle"]),
    ("verify_K2_P7", ["verify", "K2", "P7", "--oracle"]),
    ("verify_P4_P3", ["verify", "P4", "P3"]),
    ("table_paths_7", ["table", "paths", "7"]),
    ("table_cycles_7", ["table", "cycles", "7"]),
    ("table_paths_3", ["table", "paths", "3"]),
    ("product_K2_P3", ["product", "K2", "P3"]),
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("fmt", ["text", "structured"])
@pytest.mark.parametrize("name, argv", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, fmt, capsys):
    code, out, _ = run([*argv, "--format", fmt], capsys)
    assert code == 0
    golden = GOLDEN / f"{name}.{'json' if fmt == 'structured' else 'txt'}"
    if os.environ.get("UPDATE_GOLDEN"):
        golden.parent.mkdir(exist_ok=True)
        golden.write_text(out)
    assert out == golden.read_text()


def test_analyze_values(capsys):
    _, out, _ = run(["analyze", "C9", "--format", "structured"], capsys)
    res = parse(out).results
    assert res["I'"]["value"] == res["I''"]["value"] == 6
    _, out, _ = run(["analyze", "K2", "--format", "structured"], capsys)
    assert parse(out).results["identifiable"] is False


def test_table_rows(capsys):
    _, out, _ = run(["table", "cycles", "7", "--format", "structured"], capsys)
    row7 = parse(out).results["rows"][-1]
    assert [row7[k]["value"] for k in ("I", "I'", "I''")] == [5, 4, 4]


def test_verify_not_identifiable(capsys):
    code, out, err = run(["verify", "K2", "P3"], capsys)
    assert code == 1 and "not identifiable" in err and out == ""


def test_parse_error_exit(capsys):
    assert run(["analyze", "no_such_file.txt"], capsys)[0] == 2
    assert run(["analyze", "LEX(P3"], capsys)[0] == 2


def test_cap_refusal_exit(capsys):
    assert run(["verify", "C5", "C6", "--oracle"], capsys)[0] == 3
    assert run(["verify", "C5", "C6", "--oracle", "--cap", "30"], capsys)[0] == 0
    assert run(["analyze", "LEX(P3,P10)"], capsys)[0] == 3
    assert run(["table", "paths", "30"], capsys)[0] == 3


def test_edge_list_file_input(tmp_path, capsys):
    f = tmp_path / "p5.txt"
    f.write_text("5 4\n0 1\n1 2\n2 3\n3 4\n")
    code, out, _ = run(["analyze", str(f), "--format", "structured"], capsys)
    assert code == 0
    assert parse(out).results["I"]["value"] == 3


def test_product_edge_list_parses_back(tmp_path, capsys):
    _, out, _ = run(["product", "P3", "P4"], capsys)
    f = tmp_path / "prod.txt"
    f.write_text(out)
    code, out, _ = run(["verify", "K2", str(f), "--format", "structured"], capsys)
    assert code == 0


def test_timing_only_on_request(capsys):
    _, out, _ = run(["twins", "P4", "--format", "structured"], capsys)
    assert "timing_ms" not in out
    _, out, _ = run(["twins", "P4", "--format", "structured", "--timing"], capsys)
    assert set(parse(out).timing) == {"parse", "twins"}


def test_report_roundtrip():
    r = RunReport("verify", ["P3", "P4"], {"predicted": 9, "nested": {"a": [1, 2]}}, {"x": 1.5})
    assert parse(emit(r)) == r
    r = RunReport("twins", ["P3"], {"s": 0})
    assert parse(emit(r)) == r


def test_corpus_command(capsys):
    code, out, _ = run(["corpus"], capsys)
    assert code == 0
    assert out.strip().endswith("cases ok")
