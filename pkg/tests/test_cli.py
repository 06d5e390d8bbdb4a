import json
import math

import pytest

from unruhspin import cli


def test_parse_grid_counts():
    grid = cli.parse_grid("0:5:0.25")
    assert len(grid) == 21
    assert grid[0] == 0.0
    assert abs(grid[-1] - 5.0) < 1e-12
    assert cli.parse_grid("2.5") == [2.5]
    assert cli.parse_grid(3) == [3.0]
    # inclusive endpoint survives float stepping
    assert len(cli.parse_grid("0:2:0.1")) == 21


def test_parse_grid_rejects_garbage():
    for bad in ("a:b:c", "0:1:0", "0:1:-0.5", "2:1:0.5", "1:2:3:4"):
        with pytest.raises(cli.UsageError):
            cli.parse_grid(bad)


def test_float_format_is_full_precision():
    assert cli.format_float(1 / 3) == "3.3333333333333331e-01"
    assert float(cli.format_float(math.pi)) == math.pi
    assert cli.format_float(float("nan")) == "nan"


def test_csv_round_trip(tmp_path):
    out = tmp_path / "sweep.csv"
    code = cli.main(["occupation", "--omega", "0:2:0.5", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    header, records = cli.parse_csv(text, cli.OCCUPATION_TYPES)
    assert header == cli.OCCUPATION_COLUMNS
    assert len(records) == 5
    assert cli.emit_csv(header, records) == text  # byte-identical re-emission
    assert records[0]["occupation_closed"] == 0.5


def test_json_lines_keys_match_csv_header(tmp_path):
    out = tmp_path / "sweep.jsonl"
    code = cli.main(["entanglement", "--delta", "1", "--deta", "0:0.2:0.1",
                     "--format", "json-lines", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    for line in lines:
        record = json.loads(line)
        assert list(record) == cli.ENTANGLEMENT_COLUMNS


def test_error_rows_use_nan_and_exit_2(tmp_path, capsys):
    code = cli.main(["occupation", "--omega=-1"])
    captured = capsys.readouterr()
    assert code == 2
    row = captured.out.splitlines()[1].split(",")
    assert row[1] == "nan"
    assert "omega" in row[-1]
    # the same row serializes to null in json-lines
    code = cli.main(["occupation", "--omega=-1", "--format", "json-lines"])
    captured = capsys.readouterr()
    assert code == 2
    record = json.loads(captured.out.splitlines()[0])
    assert record["occupation_closed"] is None


def test_usage_errors_exit_1(tmp_path, capsys):
    assert cli.main([]) == 1
    assert cli.main(["entanglement", "--delta", "0"]) == 1
    assert cli.main(["occupation", "--omega", "1:0:1"]) == 1
    bad_conf = tmp_path / "bad.conf"
    bad_conf.write_text("no_such_key = 1\n")
    assert cli.main(["occupation", "--config", str(bad_conf)]) == 1
    capsys.readouterr()


def test_config_supplies_defaults_and_flags_win(tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("omega = 0:1:1   # two points\nformat = json-lines\n")
    assert cli.main(["occupation", "--config", str(conf)]) == 0
    out = capsys.readouterr().out
    assert len(out.splitlines()) == 2
    assert out.lstrip().startswith("{")
    # explicit flag overrides the config value
    assert cli.main(["occupation", "--config", str(conf), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == ",".join(cli.OCCUPATION_COLUMNS)


def test_sweeps_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["entanglement", "--delta", "1", "--deta", "0:1:0.25"]
    assert cli.main(args + ["--out", str(a)]) == 0
    assert cli.main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_compare_report_deterministic(tmp_path, capsys):
    args = ["compare", "--n-max", "16", "--r", "0:0.5:0.5", "--deta", "0:2:2"]
    json_a, json_b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli.main(args + ["--out", str(json_a)]) == 0
    text_a = capsys.readouterr().out
    assert cli.main(args + ["--out", str(json_b)]) == 0
    text_b = capsys.readouterr().out
    assert text_a == text_b
    assert json_a.read_bytes() == json_b.read_bytes()
    doc = json.loads(json_a.read_text())
    assert set(doc) == {"scalar", "fermion", "provenance"}
    assert doc["fermion"]["excited_schmidt_rank"] == 1
    assert doc["scalar"]["excited_schmidt_rank"] > 1


def test_wigner_sweep_columns(capsys):
    code = cli.main(["wigner", "--delta", "1", "--deta", "0:0.002:0.001",
                     "--steps", "10"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(cli.WIGNER_COLUMNS)
    assert len(lines) == 4
    header, records = cli.parse_csv("\n".join(lines) + "\n", cli.WIGNER_TYPES)
    # zero step: spin map and oracle both the identity
    assert records[0]["d01"] == 0.0
    assert records[0]["gap_max"] <= 1e-14
    assert records[0]["steps"] == 10
