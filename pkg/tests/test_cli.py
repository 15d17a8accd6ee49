"""Command line interface: parsing, output formats, exit codes, cache flags."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from wdvv_enum.cache_store import HEADER
from wdvv_enum.cli import main, parse_int_range, parse_multi_index


@pytest.fixture()
def runner():
    return CliRunner()


def test_parse_multi_index():
    assert parse_multi_index("") == ()
    assert parse_multi_index("2^5") == (2,) * 5
    assert parse_multi_index("3,2^4") == (3, 2, 2, 2, 2)
    assert parse_multi_index("-1") == (-1,)
    assert parse_multi_index(" 1 , 2 ") == (1, 2)


def test_parse_int_range():
    assert parse_int_range("6") == [6]
    assert parse_int_range("6..8") == [6, 7, 8]
    assert parse_int_range("1,3..4") == [1, 3, 4]


def test_invariant_published_value(runner):
    result = runner.invoke(main, [
        "invariant", "--d", "6", "--alpha", "2^8", "--beta", "", "--k", "1",
        "--mode", "gamma",
    ])
    assert result.exit_code == 0
    assert result.output.strip() == "-92"


def test_invariant_seed_and_vanishing(runner):
    result = runner.invoke(main, ["invariant", "--d", "1", "--k", "0"])
    assert result.exit_code == 0 and result.output.strip() == "1"
    result = runner.invoke(main, ["invariant", "--d", "0", "--k", "5"])
    assert result.exit_code == 0 and result.output.strip() == "0"


def test_invariant_rational_output(runner):
    result = runner.invoke(main, [
        "invariant", "--d", "2", "--alpha", "1^3", "--k", "0",
    ])
    assert result.exit_code == 0
    assert "/" in result.output or result.output.strip().lstrip("-").isdigit()


def test_invariant_both_modes_consistent(runner):
    result = runner.invoke(main, [
        "invariant", "--d", "6", "--alpha", "2^5", "--k", "7", "--mode", "both",
    ])
    gamma, welschinger = result.output.split()
    assert int(gamma) == 8320 and int(welschinger) == 4160


def test_invariant_trace_goes_to_stderr(runner):
    result = runner.invoke(main, [
        "--trace", "invariant", "--d", "2", "--k", "5",
    ])
    assert result.output.splitlines()[-1] == "-2"
    assert "relation=" in result.output  # CliRunner mixes stderr in


def test_malformed_multi_index_exits_2(runner):
    result = runner.invoke(main, ["invariant", "--d", "2", "--alpha", "2^^3"])
    assert result.exit_code == 2


def test_table_csv(runner):
    result = runner.invoke(main, [
        "table", "--d", "6", "--alpha", "2^5", "--alpha", "2^6",
        "--alpha", "2^7", "--alpha", "2^8", "--k", "1..7",
    ])
    assert result.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert len(rows) == 28
    published = {
        ("2,2,2,2,2", "7"): "8320",
        ("2,2,2,2,2,2", "5"): "-2000",
        ("2,2,2,2,2,2,2", "3"): "448",
        ("2,2,2,2,2,2,2,2", "1"): "-92",
    }
    table = {(row["alpha"], row["k"]): row["gamma"] for row in rows}
    for key, expected in published.items():
        assert table[key] == expected
    # undefined interior count leaves the l column empty and gamma zero
    assert {row["l"] for row in rows if row["gamma"] == "0"} == {""}


def test_table_json_matches_csv(runner):
    args = ["table", "--d", "10", "--alpha", "3^9", "--k", "2"]
    as_csv = runner.invoke(main, args)
    as_json = runner.invoke(main, ["--format", "json"] + args)
    row = json.loads(as_json.output)[0]
    assert row["gamma"] == "-713472"
    assert row["welschinger"] == 356736
    csv_row = next(csv.DictReader(io.StringIO(as_csv.output)))
    assert csv_row["gamma"] == row["gamma"]
    assert int(csv_row["welschinger"]) == row["welschinger"]


def test_table_deterministic(runner):
    args = ["table", "--d", "4..5", "--alpha", "2,1", "--k", "0..4"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.output == second.output


def test_threads_flag_gives_identical_output(runner):
    args = ["table", "--d", "6", "--alpha", "2^6", "--beta", "2", "--k", "0..4"]
    serial = runner.invoke(main, args)
    parallel = runner.invoke(main, ["--threads", "4"] + args)
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.output == parallel.output


def test_verify_passes_and_warm_cache_identical(runner, tmp_path):
    cache = str(tmp_path / "cache.txt")
    cold = runner.invoke(main, ["--cache", cache, "verify"])
    assert cold.exit_code == 0, cold.output
    assert "FAIL" not in cold.output
    warm = runner.invoke(main, ["--cache", cache, "verify"])
    assert warm.exit_code == 0
    assert warm.output == cold.output


def test_verify_detects_corrupted_seed(runner, tmp_path):
    cache = tmp_path / "cache.txt"
    cache.write_text(HEADER + "\nclosed;d=3;m=;11/1\n")
    result = runner.invoke(main, ["--cache", str(cache), "verify"])
    assert result.exit_code == 1
    assert "FAIL closed d=3" in result.output


def test_corrupt_cache_ignored_by_default(runner, tmp_path):
    cache = tmp_path / "cache.txt"
    cache.write_text(HEADER + "\nnot a record\n")
    result = runner.invoke(main, [
        "--cache", str(cache), "invariant", "--d", "1", "--k", "0",
    ])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "1"


def test_corrupt_cache_strict_exits_2(runner, tmp_path):
    cache = tmp_path / "cache.txt"
    cache.write_text(HEADER + "\nnot a record\n")
    result = runner.invoke(main, [
        "--cache", str(cache), "--strict-cache", "invariant", "--d", "1",
    ])
    assert result.exit_code == 2


def test_cache_round_trips_through_commands(runner, tmp_path):
    cache = str(tmp_path / "cache.txt")
    first = runner.invoke(main, [
        "--cache", cache, "invariant", "--d", "6", "--alpha", "2^8", "--k", "1",
    ])
    assert first.exit_code == 0
    body = (tmp_path / "cache.txt").read_text()
    assert body.startswith(HEADER)
    assert "open;d=6;a=2,2,2,2,2,2,2,2;b=;k=1;-92/1" in body
