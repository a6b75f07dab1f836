import io
import json

import pytest

from ssquintic.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_count_single_prime_csv():
    code, out = run(["count", "--family", "z10", "--prime", "29",
                     "--format", "csv"])
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "p,residue,deg_g,count,elapsed_ms"
    p, residue, deg_g, count, _ = lines[1].split(",")
    assert (p, residue, deg_g, count) == ("29", "9", "8", "3")


def test_count_range_json():
    code, out = run(["count", "--family", "z8", "--range", "14..60",
                     "--format", "json"])
    assert code == EXIT_OK
    rows = json.loads(out)
    by_p = {r["p"]: r for r in rows}
    assert by_p[23]["count"] == 0
    assert by_p[31]["count"] == 1
    assert by_p[31]["deg_g"] == 3
    assert by_p[31]["residue"] == 15


def test_count_z10_without_residue_has_null_degree():
    code, out = run(["count", "--family", "z10", "--prime", "17",
                     "--format", "json"])
    assert code == EXIT_OK
    row = json.loads(out)[0]
    assert row["deg_g"] is None
    assert row["count"] == 0


def test_count_deterministic_across_jobs():
    argv = ["count", "--family", "z8", "--range", "14..120",
            "--format", "csv"]
    _, out1 = run(argv + ["--jobs", "1"])
    _, out2 = run(argv + ["--jobs", "4"])

    def strip_elapsed(text):
        return [line.rsplit(",", 1)[0] for line in text.splitlines()]

    assert strip_elapsed(out1) == strip_elapsed(out2)


def test_range_skips_small_primes(capsys):
    code, out = run(["count", "--family", "z8", "--range", "2..30",
                     "--format", "csv"])
    assert code == EXIT_OK
    emitted = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert emitted == ["17", "19", "23", "29"]


def test_fixed():
    code, out = run(["fixed", "--type", "2", "--prime", "43"])
    assert code == EXIT_OK
    assert "superspecial" in out
    code, out = run(["fixed", "--type", "1", "--prime", "31",
                     "--format", "csv"])
    assert out.strip().splitlines()[1] == "31,1,False"


def test_verify_z10():
    code, out = run(["verify", "--family", "z10", "--prime", "19"])
    assert code == EXIT_OK
    assert "17 lambda-values checked" in out
    assert "0 mismatches" in out
    assert "5 superspecial lambda" in out


def test_verify_z8():
    code, out = run(["verify", "--family", "z8", "--prime", "23"])
    assert code == EXIT_OK
    assert "0 mismatches" in out


def test_verify_no_superspecial_when_residue_wrong():
    code, out = run(["verify", "--family", "z10", "--prime", "17"])
    assert code == EXIT_OK
    assert "0 superspecial lambda" in out


def test_oracle_superspecial():
    code, out = run(["oracle", "--n", "5", "--f", "0,-1,0,0,1", "--p", "19"])
    assert code == EXIT_OK
    assert out.strip() == "superspecial"


def test_oracle_witnesses():
    code, out = run(["oracle", "--n", "5", "--f", "0,-1,0,0,1", "--p", "17"])
    assert code == EXIT_OK
    assert "not superspecial" in out
    assert "(2,4,1,2)" in out


def test_oracle_rejects_non_squarefree():
    code, _ = run(["oracle", "--n", "5", "--f", "1,2,1", "--p", "19"])
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["count", "--family", "z10", "--prime", "15"],
    ["count", "--family", "z10", "--prime", "13"],
    ["count", "--family", "nope", "--prime", "19"],
    ["count", "--family", "z10", "--range", "bad"],
    ["nonsense"],
])
def test_usage_errors(argv):
    code, _ = run(argv)
    assert code == EXIT_USAGE


def test_embedded_verify_flag():
    code, _ = run(["count", "--family", "z10", "--prime", "19", "--verify",
                   "--jobs", "1"])
    assert code == EXIT_OK
