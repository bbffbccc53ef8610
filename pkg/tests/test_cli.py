"""Command line interface: pipelines, outputs, exit codes."""

from __future__ import annotations

import shutil
import subprocess

import pytest

from conftest import GOLDEN_ARRAY, GOLDEN_DATA, GOLDEN_RECEIVED_9_9
from crisscodec import fileio, selftest
from crisscodec.cli import main
from crisscodec.fileio import ArrayFile

DATA_FILE = ArrayFile("data", 7, 9, symbols=GOLDEN_DATA)
ARRAY_FILE = ArrayFile("array", 7, 9, rows=GOLDEN_ARRAY)
RECEIVED_FILE = ArrayFile("received", 7, 9, rows=GOLDEN_RECEIVED_9_9)


@pytest.fixture
def data_path(tmp_path):
    path = tmp_path / "data.json"
    fileio.dump(DATA_FILE, path)
    return path


@pytest.fixture
def array_path(tmp_path):
    path = tmp_path / "array.json"
    fileio.dump(ARRAY_FILE, path)
    return path


@pytest.fixture
def received_path(tmp_path):
    path = tmp_path / "received.json"
    fileio.dump(RECEIVED_FILE, path)
    return path


class TestPipeline:
    def test_full_round_trip_is_byte_identical(self, tmp_path, data_path):
        array = tmp_path / "array.json"
        received = tmp_path / "received.json"
        decoded = tmp_path / "decoded.json"
        recovered = tmp_path / "recovered.json"

        assert main([
            "encode", "--n", "9", "--q", "7", "--data", str(data_path),
            "--allow-unproven-parameters", "--out", str(array),
        ]) == 0
        assert array.read_bytes() == fileio.dumps(ARRAY_FILE).encode()

        assert main([
            "corrupt", "--in", str(array), "--row", "9", "--col", "9",
            "--out", str(received),
        ]) == 0
        assert received.read_bytes() == fileio.dumps(RECEIVED_FILE).encode()

        assert main(["decode", "--in", str(received), "--out", str(decoded)]) == 0
        assert decoded.read_bytes() == array.read_bytes()

        assert main([
            "recover", "--in", str(decoded), "--allow-unproven-parameters",
            "--out", str(recovered),
        ]) == 0
        assert recovered.read_bytes() == data_path.read_bytes()

    def test_stdout_when_out_omitted(self, capsys, data_path):
        assert main([
            "encode", "--n", "9", "--q", "7", "--data", str(data_path),
            "--allow-unproven-parameters",
        ]) == 0
        assert capsys.readouterr().out == fileio.dumps(ARRAY_FILE)


class TestVerify:
    def test_codeword(self, capsys, array_path):
        assert main(["verify", "--in", str(array_path)]) == 0
        assert "codeword of the n=9, q=7 code" in capsys.readouterr().out

    def test_non_codeword(self, capsys, tmp_path, array_path):
        rows = [list(r) for r in GOLDEN_ARRAY]
        rows[3][3] = (rows[3][3] + 1) % 7
        bad = tmp_path / "bad.json"
        fileio.dump(ArrayFile("array", 7, 9, rows=rows), bad)
        assert main(["verify", "--in", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "not a codeword" in err and "condition 4" in err


class TestExitCodes:
    def test_encode_without_flag_below_proven_range(self, capsys, data_path):
        assert main(["encode", "--n", "9", "--q", "7", "--data", str(data_path)]) == 2
        assert "proven" in capsys.readouterr().err

    def test_flag_file_mismatch(self, capsys, data_path):
        rc = main([
            "encode", "--n", "11", "--q", "3", "--data", str(data_path),
        ])
        assert rc == 2
        assert "written for n=9" in capsys.readouterr().err

    def test_kind_mismatch(self, capsys, array_path):
        assert main(["decode", "--in", str(array_path)]) == 2
        assert 'expected kind "received"' in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["decode", "--in", str(tmp_path / "nope.json")]) == 2

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{oops")
        assert main(["verify", "--in", str(path)]) == 2
        assert "JSON" in capsys.readouterr().err

    def test_bad_corrupt_index(self, capsys, array_path):
        rc = main(["corrupt", "--in", str(array_path), "--row", "0", "--col", "1"])
        assert rc == 2

    def test_decode_failure_is_exit_3(self, capsys, tmp_path):
        rows = [[1] * 8 for _ in range(8)]
        path = tmp_path / "noise.json"
        fileio.dump(ArrayFile("received", 7, 9, rows=rows), path)
        assert main(["decode", "--in", str(path)]) == 3
        assert "error:" in capsys.readouterr().err

    def test_recover_tampered_array_is_exit_2(self, capsys, tmp_path):
        rows = [list(r) for r in GOLDEN_ARRAY]
        rows[5][2] = (rows[5][2] + 3) % 7
        path = tmp_path / "tampered.json"
        fileio.dump(ArrayFile("array", 7, 9, rows=rows), path)
        rc = main(["recover", "--in", str(path), "--allow-unproven-parameters"])
        assert rc == 2
        assert "not a codeword" in capsys.readouterr().err

    def test_argparse_errors_are_exit_2(self, capsys):
        assert main(["frobnicate"]) == 2
        assert main([]) == 2
        assert main(["encode", "--n", "9"]) == 2
        capsys.readouterr()

    def test_help_is_exit_0(self, capsys):
        assert main(["--help"]) == 0
        assert "encode" in capsys.readouterr().out


class TestAnalyze:
    def test_csv_output(self, capsys):
        assert main([
            "analyze", "--n-min", "11", "--n-max", "12", "--q", "3,5",
            "--format", "csv",
        ]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("n,q,k1,k2,k3,")
        assert len(lines) == 5
        assert lines[1].startswith("11,3,")

    def test_table_output_to_file(self, tmp_path):
        out = tmp_path / "table.txt"
        assert main([
            "analyze", "--n-min", "11", "--n-max", "11", "--q", "7",
            "--out", str(out),
        ]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 2
        assert lines[0].split()[:2] == ["n", "q"]

    def test_unproven_floor(self, capsys):
        assert main(["analyze", "--n-min", "9", "--n-max", "9", "--q", "7"]) == 2
        assert main([
            "analyze", "--n-min", "9", "--n-max", "9", "--q", "7",
            "--allow-unproven-parameters",
        ]) == 0
        capsys.readouterr()

    def test_bad_ranges_and_alphabets(self, capsys):
        assert main(["analyze", "--n-min", "12", "--n-max", "11", "--q", "3"]) == 2
        assert main(["analyze", "--n-min", "11", "--n-max", "99999", "--q", "3"]) == 2
        assert main(["analyze", "--n-min", "11", "--n-max", "11", "--q", "3,x"]) == 2
        assert main(["analyze", "--n-min", "11", "--n-max", "11", "--q", "2"]) == 2
        capsys.readouterr()


class TestCount:
    def test_empty_instance(self, capsys):
        assert main(["count", "--n", "4", "--q", "3"]) == 0
        out = capsys.readouterr().out
        assert "0 (empty code)" in out and "n/a" in out

    def test_smallest_nonempty_instance(self, capsys):
        assert main(["count", "--n", "5", "--q", "8"]) == 0
        out = capsys.readouterr().out
        assert "code size:               2097152" in out
        assert "code redundancy:         18 symbols" in out

    def test_bruteforce_guard(self, capsys):
        assert main(["count", "--n", "5", "--q", "8", "--mode", "bruteforce"]) == 2
        assert "guard" in capsys.readouterr().err


class TestFixturesCommand:
    def test_ok(self, capsys):
        assert main(["verify-fixtures"]) == 0
        out = capsys.readouterr().out
        assert out.count(": OK") == 4


class TestSelftestCommand:
    def test_pass(self, capsys):
        assert main(["selftest", "--n", "11", "--q", "3", "--trials", "1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("selftest n=11 q=3 seed=0")
        assert "round-trip: PASS" in out

    def test_property_failure_is_exit_3(self, capsys, monkeypatch):
        monkeypatch.setattr(
            selftest, "_decode_tamper_hook",
            lambda decoded: [[0] * len(decoded) for _ in decoded],
        )
        assert main(["selftest", "--n", "11", "--q", "3", "--trials", "1"]) == 3
        assert "round-trip: FAIL" in capsys.readouterr().out

    def test_below_proven_range_is_exit_2(self, capsys):
        assert main(["selftest", "--n", "9", "--q", "7", "--trials", "1"]) == 2
        capsys.readouterr()


def test_console_script_is_installed():
    exe = shutil.which("crisscodec")
    assert exe, "console script not on PATH"
    proc = subprocess.run(
        [exe, "count", "--n", "5", "--q", "8"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "2097152" in proc.stdout
