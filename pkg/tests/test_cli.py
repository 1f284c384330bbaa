import csv
import io
import json
import subprocess
import sys

import pytest

from biform.cli import bijection_grid, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_count_example(capsys):
    code, out, _ = run_cli(capsys, "count", "--bound", "4", "--method", "brute")
    assert code == 0
    assert out.startswith("# biform-counter v1, command=count")
    r = rows(out)
    assert list(r[0]) == ["B", "method", "count", "elapsed_s", "shards"]
    assert r[0]["count"] == "12"


def test_solvable_example(capsys):
    code, out, _ = run_cli(capsys, "solvable", "1", "1", "-3")
    assert code == 0 and rows(out)[0]["verdict"] == "insoluble"
    code, out, _ = run_cli(capsys, "solvable", "1", "1", "-2")
    assert code == 0 and rows(out)[0]["witness"] == "1 1 1"


def test_verify_bijection_example(capsys):
    code, out, _ = run_cli(capsys, "verify-bijection", "--bmax", "1000")
    assert code == 0
    r = rows(out)
    assert [int(x["B"]) for x in r] == bijection_grid(1000)
    assert all(int(x["T"]) == 4 * int(x["brute"]) for x in r)


def test_parametrize(capsys):
    code, out, _ = run_cli(capsys, "parametrize", "4", "8", "-3", "1", "1", "2")
    assert code == 0
    r = rows(out)[0]
    assert (r["f"], r["g"], r["u"]) == ("1 1 1", "1 1 2", "1 2 -3")


@pytest.mark.parametrize("lemma", ["1", "2", "3", "4"])
def test_bounds_runs(capsys, lemma):
    code, out, _ = run_cli(capsys, "bounds", "--lemma", lemma, "--maxpow", "1", "--samples", "5")
    assert code == 0 and len(rows(out)) > 0


def test_output_is_reproducible(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        p = tmp_path / name
        assert main(["sk", "--samples", "20", "--seed", "7", "--output", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    p = tmp_path / "c.csv"
    main(["sk", "--samples", "20", "--seed", "8", "--output", str(p)])
    assert p.read_bytes() != outs[0]


def test_json_format(capsys):
    code, out, _ = run_cli(capsys, "count", "--bound", "100", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "biform-counter v1" and doc["rows"][0]["count"] == 1992


def test_fit(capsys):
    code, out, _ = run_cli(capsys, "fit", "--bounds", "100,1000,10000")
    assert code == 0 and "fitted_c=" in out and len(rows(out)) == 3


def test_exit_codes(capsys, tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["count", "--bound", "x"])
    assert e.value.code == 2
    assert main(["count", "--bound", "10", "--shards", "0"]) == 2
    assert main(["solvable", "0", "1", "1"]) == 2
    assert main(["count", "--bound", "10", "--output", str(tmp_path / "no" / "such" / "dir.csv")]) == 2
    assert main(["count", "--bound", str(10**7), "--method", "brute"]) == 3
    capsys.readouterr()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "biform", "count", "--bound", "10"], capture_output=True, text=True)
    assert r.returncode == 0 and rows(r.stdout)[0]["count"] == "72"
