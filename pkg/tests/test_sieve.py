import io
from math import gcd

import pytest

from sedf.groups import make_group
from sedf.sieve import (
    STATUS_ELIMINATED,
    STATUS_SURVIVES,
    AdmissibleA,
    admissible_a,
    apply_filters,
    divisibility_admissible_a,
    enumerate_candidates,
    format_csv_row,
    group_advisory,
    make_param_set,
    sieve_report,
    write_csv,
    _global_min_inequalities,
)


def test_enumerate_examples():
    cands = {(ps.v, ps.m, ps.k): ps.lam for ps in enumerate_candidates(300)}
    assert cands[(243, 11, 22)] == 20
    assert cands[(10, 3, 3)] == 2
    big = {(ps.v, ps.m, ps.k): ps.lam for ps in enumerate_candidates(784) if ps.v == 784}
    assert big[(784, 30, 18)] == 12


def test_enumerate_constraints_hold():
    for ps in enumerate_candidates(150):
        assert 4 <= ps.v <= 150 and ps.m >= 3 and ps.k >= 2 and ps.m * ps.k <= ps.v
        assert (ps.m - 1) * ps.k * ps.k == ps.lam * (ps.v - 1)
        assert ps.lam >= 1


def test_enumerate_order_and_determinism():
    rows1 = [ps.key() for ps in enumerate_candidates(200)]
    rows2 = [ps.key() for ps in enumerate_candidates(200)]
    assert rows1 == rows2 == sorted(rows1)


def test_enumerate_is_complete_against_brute_force():
    got = {ps.key() for ps in enumerate_candidates(80)}
    want = set()
    for v in range(4, 81):
        for m in range(3, v + 1):
            for k in range(2, v // m + 1):
                if ((m - 1) * k * k) % (v - 1) == 0:
                    want.add((v, m, k))
    assert got == want


def test_make_param_set_validates():
    with pytest.raises(ValueError):
        make_param_set(243, 11, 21)  # divisibility fails
    with pytest.raises(ValueError):
        make_param_set(10, 2, 3)  # m too small


def _brute_admissible(ps):
    """Oracle: scan every a in 1..lambda-1 with the definitional checks."""
    out = []
    lam, m = ps.lam, ps.m
    for a in range(1, lam):
        if (lam * lam) % a:
            continue
        g = gcd(lam, a)
        if (g * g) % a:
            continue
        if (m - 2) % ((lam + a) // g):
            continue
        if (lam * (m - 2)) % (lam + a):
            continue
        ell = 1 + lam * (m - 2) // (lam + a)
        if not (m < 2 * ell <= 2 * (m - 2)):
            continue
        if a * (m - 2) < lam + a:
            continue
        out.append(AdmissibleA(a, g, ell))
    return out


@pytest.mark.parametrize(
    "v,m,k",
    [
        (784, 30, 18),
        (243, 11, 22),
        (2376, 11, 190),
        (540, 12, 42),
        (2646, 16, 138),
        (2401, 7, 280),
        (9801, 13, 420),
        (4096, 8, 390),
    ],
)
def test_divisor_scan_matches_brute_force_oracle(v, m, k):
    ps = make_param_set(v, m, k)
    assert divisibility_admissible_a(ps) == _brute_admissible(ps)


def test_admissible_examples():
    ps = make_param_set(784, 30, 18)
    assert [x.a for x in divisibility_admissible_a(ps)] == [2, 4, 9]
    assert admissible_a(ps) == []

    ps = make_param_set(243, 11, 22)
    assert [(x.a, x.ell) for x in admissible_a(ps)] == [(10, 7), (16, 6)]

    ps = make_param_set(2376, 11, 190)
    assert [x.a for x in admissible_a(ps)] == [19]
    assert [x.a for x in divisibility_admissible_a(ps)] == [19, 76]


def test_admissible_monotone_under_extra_candidates():
    # feeding extra a values through the inequality stage cannot revive an
    # eliminated set: the divisor scan already contains every legal candidate
    ps = make_param_set(784, 30, 18)
    assert not any(_global_min_inequalities(ps, a) for a in range(1, ps.lam))


def test_apply_filters_catalogue_rows():
    assert apply_filters(make_param_set(784, 30, 18)).filter_id == "F-ADMA"
    out = apply_filters(make_param_set(2376, 11, 190))
    assert (out.status, out.filter_id) == (STATUS_ELIMINATED, "F-EVEN")
    out = apply_filters(make_param_set(540, 12, 42))
    assert out.status == STATUS_SURVIVES and out.filter_id is None
    assert apply_filters(make_param_set(10, 3, 3)).filter_id == "F-PROP1A"


def test_apply_filters_first_hit_wins():
    # m=3 fires PROP1A even though lambda=2 would also fire PROP1B
    out = apply_filters(make_param_set(10, 3, 3))
    assert out.filter_id == "F-PROP1A"


def test_known_example_survives_every_filter():
    out = apply_filters(make_param_set(243, 11, 22))
    assert out.status == STATUS_SURVIVES
    assert [x.a for x in out.admissible] == [10, 16]


def test_report_deterministic_and_csv_shape():
    r1 = sieve_report(300)
    r2 = sieve_report(300)
    buf1, buf2 = io.StringIO(), io.StringIO()
    write_csv(r1, buf1)
    write_csv(r2, buf2)
    assert buf1.getvalue() == buf2.getvalue()
    line = next(
        format_csv_row(ps, o) for ps, o in r1 if ps.key() == (243, 11, 22)
    )
    assert line == "243,11,22,20,SURVIVES,,10;16"


def test_report_parallel_matches_serial():
    serial = sieve_report(400, workers=1)
    parallel = sieve_report(400, workers=2)
    assert serial == parallel


def test_report_cap():
    with pytest.raises(ValueError):
        sieve_report(200, v_cap=100)


def test_small_vmax_empty():
    assert sieve_report(3) == []


def test_group_advisory():
    assert group_advisory(make_group([243]))  # cyclic prime power
    assert group_advisory(make_group([3, 9]))  # order p^3, exponent p^2
    assert group_advisory(make_group([3, 3, 3]))  # elementary cube
    assert group_advisory(make_group([9, 3, 3])) == []  # order p^4
    assert group_advisory(make_group([15])) == []
    assert "cyclic" in group_advisory(make_group([49]))[0]
