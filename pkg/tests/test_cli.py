import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from sedf.cli import main

GOOD = "group: 5\nset: (1),(4)\nset: (2),(3)\n"
PERTURBED = "group: 5\nset: (1),(2)\nset: (3),(4)\n"
OVERLAP = "group: 5\nset: (1),(2)\nset: (2),(3)\n"


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_verify_accepts_good_family(tmp_path):
    code, out, _ = run_cli("verify", write(tmp_path, "g.txt", GOOD))
    assert code == 0
    assert "SEDF(5,2,2,1)" in out


def test_verify_rejects_perturbed_family(tmp_path):
    code, out, _ = run_cli("verify", write(tmp_path, "p.txt", PERTURBED))
    assert code == 1
    assert "witness j=1 g=(3,) count=2" in out


def test_verify_overlap_is_exit_2(tmp_path):
    code, _, err = run_cli("verify", write(tmp_path, "o.txt", OVERLAP))
    assert code == 2
    assert "more than one subset" in err


def test_verify_parse_error_has_line_number(tmp_path):
    code, _, err = run_cli("verify", write(tmp_path, "b.txt", "group: 5\nset: oops\n"))
    assert code == 2
    assert "line 2" in err


def test_verify_missing_file():
    code, _, err = run_cli("verify", "/no/such/file")
    assert code == 2


def test_chars_alias_prints_profile(tmp_path):
    code, out, _ = run_cli("chars", write(tmp_path, "g.txt", GOOD))
    assert code == 0
    assert "profile:" in out and "class=NONZERO" in out


def test_verify_profile_csv(tmp_path):
    code, out, _ = run_cli("verify", write(tmp_path, "g.txt", GOOD), "--csv")
    assert code == 0
    assert "chi,order,class" in out


def test_sieve_vmax_243_contains_known_row(tmp_path):
    out_path = tmp_path / "sieve.csv"
    code, _, _ = run_cli("sieve", "--vmax", "243", "--out", str(out_path))
    assert code == 0
    text = out_path.read_text(encoding="utf-8")
    assert "243,11,22,20,SURVIVES,,10;16" in text
    survivors = [
        line
        for line in text.splitlines()[1:]
        if line.split(",")[4] != "ELIMINATED" and line.split(",")[0] == "243"
    ]
    assert survivors == ["243,11,22,20,SURVIVES,,10;16"]


def test_sieve_vmax_3_empty_body(tmp_path):
    out_path = tmp_path / "sieve.csv"
    code, _, _ = run_cli("sieve", "--vmax", "3", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text(encoding="utf-8").strip() == "v,m,k,lambda,status,filter_id,admissible_a"


def test_sieve_cap_enforced():
    code, _, err = run_cli("sieve", "--vmax", "200000")
    assert code == 2 and "cap" in err


def test_primesearch_small_bound():
    code, out, _ = run_cli("primesearch", "--bound", "400")
    assert code == 0
    assert "p=313 prime verdict=ELIMINATED" in out
    assert "candidate primes <= 400: [313]" in out


def test_primesearch_brute_agreement():
    code, out, _ = run_cli("primesearch", "--bound", "400", "--brute", "3000")
    assert code == 0
    assert "chain agreement: ok" in out


def test_search_round_trip_through_verify(tmp_path):
    outdir = tmp_path / "found"
    code, out, _ = run_cli(
        "search", "--group", "5", "--m", "2", "--k", "2", "--out", str(outdir)
    )
    assert code == 0
    assert "status=FOUND" in out
    files = sorted(outdir.glob("family*.txt"))
    assert files
    for path in files:
        vcode, vout, _ = run_cli("verify", str(path))
        assert vcode == 0 and "SEDF(5,2,2,1)" in vout


def test_search_all_flag():
    code, out, _ = run_cli("search", "--group", "3,3", "--all")
    assert code == 0
    assert "status=FOUND" in out  # the trivial (9,9,1,1) partition
    for line in out.splitlines():
        if "status=FOUND" in line and " k=1 " not in line and " m=2 " not in line:
            raise AssertionError(f"unexpected nontrivial hit: {line}")


def test_search_requires_m_and_k():
    code, _, err = run_cli("search", "--group", "5")
    assert code == 2 and "--all" in err


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        run_cli("sieve", "--vmax", "notanumber")
    assert exc.value.code == 2
