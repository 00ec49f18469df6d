import csv
import io
import json
import subprocess
import sys

import pytest

from mpenergy.cli import CSV_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEnergy:
    def test_k131(self, capsys):
        code, out, _ = run(capsys, "energy", "1,3,1")
        assert code == 0
        assert "E = 6.000000000" in out

    def test_k23(self, capsys):
        code, out, _ = run(capsys, "energy", "2,3")
        assert code == 0 and "E = 4.898979486" in out

    @pytest.mark.parametrize("bad", ["1", "1,0", "a,b", "3,-1"])
    def test_usage_errors(self, capsys, bad):
        code, _, err = run(capsys, "energy", bad)
        assert code == 2 and "error" in err


class TestCompare:
    def test_decrease(self, capsys):
        code, out, _ = run(capsys, "compare", "1,2,2", "--locus", "0,1", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == CSV_HEADER
        assert rows[1][5:7] == ["Decrease", "Decrease"]

    def test_increase(self, capsys):
        code, out, _ = run(capsys, "compare", "3,3", "--locus", "0,1", "--format", "json")
        row = json.loads(out)["rows"][0]
        assert code == 0 and row["observed"] == "Increase" and row["predicted"] == "Increase"

    def test_locus_uses_typed_positions(self, capsys):
        # position 0 is the 1-part as typed even though it sorts last
        _, out, _ = run(capsys, "compare", "1,3,1", "--locus", "0,2", "--format", "json")
        row = json.loads(out)["rows"][0]
        assert row["predicted"] == "Decrease"

    @pytest.mark.parametrize("locus", ["0,0", "0,5", "x"])
    def test_bad_locus(self, capsys, locus):
        code, _, _ = run(capsys, "compare", "2,2", "--locus", locus)
        assert code == 2

    def test_inconclusive_exits_one(self, capsys):
        code, _, _ = run(capsys, "compare", "2,2", "--locus", "0,1", "--sign-tol", "10")
        assert code == 1


class TestSweep:
    def test_csv_header_and_rows(self, capsys):
        code, out, _ = run(capsys, "sweep", "--nmax", "4")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 1 + 7

    def test_repeatable_and_worker_independent(self, tmp_path, capsys):
        paths = []
        for j, workers in enumerate(("1", "1", "3")):
            p = tmp_path / f"s{j}.csv"
            assert run(capsys, "sweep", "--nmax", "8", "--workers", workers, "--out", str(p))[0] == 0
            paths.append(p.read_bytes())
        assert paths[0] == paths[1] == paths[2]

    def test_json_summary(self, capsys):
        code, out, _ = run(capsys, "sweep", "--nmax", "6", "--format", "json")
        data = json.loads(out)
        assert code == 0
        assert data["summary"]["cases"] == len(data["rows"])
        assert data["summary"]["disagree"] == 0

    def test_tripartite_and_subsweep(self, capsys):
        assert run(capsys, "sweep", "--tripartite-only", "--nmax", "12")[0] == 0
        assert run(capsys, "sweep", "--subsweep", "multipartite-i5")[0] == 0

    @pytest.mark.parametrize("argv", [
        ["--nmax", "100"], ["--nmax", "2"], ["--workers", "0"], ["--tripartite-only", "--nmax", "41"],
        ["--subsweep", "nope"], ["--sign-tol", "-1"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, "sweep", *argv)[0] == 2


class TestVerify:
    def test_resolvent(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma4.3", "--trials", "50", "--seed", "42")
        assert code == 0 and out.strip().splitlines()[-1].startswith("PASS")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma2.3", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["passed"] and data["checks"]

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "verify", "lemma9.9")
        assert code == 2 and "unknown" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mpenergy", "energy", "2,2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "E = 4.000000000" in proc.stdout
