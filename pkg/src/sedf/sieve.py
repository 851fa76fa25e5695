"""Parameter-space sieve: enumerate (v, m, k, lambda) candidates and eliminate.

Candidates are exactly the tuples allowed by the counting identity
(m-1) k^2 = lambda (v-1); each one then runs a fixed catalogue of
nonexistence filters, ordered so that reports are deterministic.  The
admissibility filter bounds the minimum squared character modulus a family
would have to exhibit, with all inequality comparisons done in
cross-multiplied integer arithmetic (the boundary cases are decided by
margins far below double precision).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import gcd, isqrt
from typing import Iterable, Iterator, Optional, TextIO

from sedf.arith import divisors, factorize, is_prime, is_square, is_squarefree
from sedf.groups import AbelianGroup
from sedf.prime_search import lemma_internal_difference_ok, theorem33_parameters

STATUS_SURVIVES = "SURVIVES"
STATUS_ELIMINATED = "ELIMINATED"
STATUS_OPEN_P3 = "OPEN_P3"

CSV_HEADER = "v,m,k,lambda,status,filter_id,admissible_a"

DEFAULT_V_MAX = 10_000
HARD_V_CAP = 100_000


@dataclass(frozen=True)
class ParamSet:
    v: int
    m: int
    k: int
    lam: int

    @cached_property
    def v_factorization(self) -> tuple[int, ...]:
        return factorize(self.v)

    def key(self) -> tuple[int, int, int]:
        return (self.v, self.m, self.k)


def make_param_set(v: int, m: int, k: int) -> ParamSet:
    """Build a candidate, deriving lambda; rejects tuples off the identity."""
    if m < 3 or k < 2 or m * k > v:
        raise ValueError(f"need m >= 3, k >= 2, mk <= v; got v={v}, m={m}, k={k}")
    num = (m - 1) * k * k
    if num % (v - 1):
        raise ValueError(f"(v-1) does not divide (m-1)k^2 for v={v}, m={m}, k={k}")
    return ParamSet(v, m, k, num // (v - 1))


@dataclass(frozen=True)
class AdmissibleA:
    a: int
    g: int  # gcd(lambda, a)
    ell: int  # forced number of subsets attaining the minimum


@dataclass(frozen=True)
class FilterOutcome:
    status: str
    filter_id: Optional[str]
    admissible: tuple[AdmissibleA, ...] = ()


def enumerate_candidates(v_max: int) -> Iterator[ParamSet]:
    """All candidates with 4 <= v <= v_max, in (v, m, k) lexicographic order."""
    if v_max < 4:
        return
    for v in range(4, v_max + 1):
        vm1 = v - 1
        found: list[tuple[int, int, int]] = []
        for k in range(2, v // 3 + 1):
            step = vm1 // gcd(k * k, vm1)
            m_top = v // k
            # m - 1 must be a positive multiple of step
            m = 1 + step
            while m <= m_top:
                if m >= 3:
                    found.append((m, k, (m - 1) * k * k // vm1))
                m += step
        found.sort()
        for m, k, lam in found:
            yield ParamSet(v, m, k, lam)


# -- admissible minimum character norms ---------------------------------------


def divisibility_admissible_a(ps: ParamSet) -> list[AdmissibleA]:
    """Values a may take for *some* nonprincipal character.

    These are the per-character constraints: 1 <= a < lambda, a | lambda^2,
    a | gcd(lambda, a)^2, (lambda + a)/gcd divides m - 2, and the implied
    count ell = 1 + lambda(m-2)/(lambda+a) lies in (m/2, m-2] with
    a(m-2) >= lambda + a.
    """
    lam, m = ps.lam, ps.m
    out = []
    for a in divisors(lam * lam):
        if a >= lam:
            break
        g = gcd(lam, a)
        if (g * g) % a:
            continue
        if (m - 2) % ((lam + a) // g):
            continue
        ell = 1 + lam * (m - 2) // (lam + a)
        if not (m < 2 * ell and ell <= m - 2):
            continue
        if a * (m - 2) < lam + a:
            continue
        out.append(AdmissibleA(a, g, ell))
    return out


def _global_min_inequalities(ps: ParamSet, a: int) -> bool:
    """Bounds the *minimum over all characters* must satisfy, exactly.

    k-range bound: lambda < k < (v-1)/v * lambda + lambda^2 / (m a), and the
    sharper identity-derived bound
    k < lambda/(m-1) + (v-1)/v * lambda + (lambda-a)^2 / (m a).
    Both comparisons are cross-multiplied to stay in integers.
    """
    v, m, k, lam = ps.v, ps.m, ps.k, ps.lam
    if lam >= k:
        return False
    if k * v * m * a >= (v - 1) * lam * m * a + lam * lam * v:
        return False
    lhs = k * v * m * a * (m - 1)
    rhs = lam * v * m * a + (v - 1) * lam * m * a * (m - 1) + (lam - a) ** 2 * v * (m - 1)
    return lhs < rhs


def admissible_a(ps: ParamSet) -> list[AdmissibleA]:
    """Candidates for the global minimum norm: divisibility stage + inequalities.

    Empty means no family with these parameters (and more than two subsets)
    can exist.
    """
    return [adm for adm in divisibility_admissible_a(ps) if _global_min_inequalities(ps, adm.a)]


# -- the filter catalogue ------------------------------------------------------


def _is_prime_cube(ps: ParamSet) -> Optional[int]:
    fac = ps.v_factorization
    if len(fac) == 3 and fac[0] == fac[1] == fac[2]:
        return fac[0]
    return None


def _p3_conditions_hold(ps: ParamSet, p: int) -> bool:
    """Full cube-case constraint set for candidate (p^3, m, k, lambda)."""
    if p % 12 != 1:
        return False
    sq = (p * p + p + 1) // 3 if (p * p + p + 1) % 3 == 0 else None
    if sq is None:
        return False
    s = isqrt(sq)
    if s * s != sq:
        return False
    params = theorem33_parameters(p, s, ps.m)
    if params is None:
        return False
    k, lam, _a = params
    if k != ps.k or lam != ps.lam:
        return False
    return lemma_internal_difference_ok(p, k)


def apply_filters(ps: ParamSet) -> FilterOutcome:
    """Run the ordered filter catalogue; first hit wins."""
    v, m, k, lam = ps.v, ps.m, ps.k, ps.lam
    if m in (3, 4):
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1A")
    if lam in (1, 2):
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1B")
    if lam >= k:
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1C")
    if lam > 1 and lam * (k - 1) * (m - 2) > (lam - 1) * k * (m - 1):
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1D")
    if v % k == 0:
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1G")
    if gcd(k, v - 1) == 1:
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1H")
    if is_squarefree(v - 1):
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1I")
    if is_squarefree(v) and gcd(m * k, v) == 1:
        return FilterOutcome(STATUS_ELIMINATED, "F-PROP1J")
    if is_prime(lam):
        return FilterOutcome(STATUS_ELIMINATED, "F-LPRIME")
    if m < 5 or k < 5 or lam < 4:
        return FilterOutcome(STATUS_ELIMINATED, "F-REMARK")
    div_stage = divisibility_admissible_a(ps)
    adm = tuple(x for x in div_stage if _global_min_inequalities(ps, x.a))
    if not adm:
        return FilterOutcome(STATUS_ELIMINATED, "F-ADMA")
    # order-2 characters take integer values, so some attainable norm must be
    # a perfect square; the candidates here are the divisibility-stage ones,
    # since the inequality prune above constrains only the global minimum
    if v % 2 == 0 and not is_square(lam) and not any(is_square(x.a) for x in div_stage):
        return FilterOutcome(STATUS_ELIMINATED, "F-EVEN", adm)
    p_cube = _is_prime_cube(ps)
    if len(ps.v_factorization) <= 3 and p_cube is None:
        return FilterOutcome(STATUS_ELIMINATED, "F-STRUCT", adm)
    if p_cube is not None:
        if _p3_conditions_hold(ps, p_cube):
            return FilterOutcome(STATUS_OPEN_P3, None, adm)
        return FilterOutcome(STATUS_ELIMINATED, "F-P3", adm)
    return FilterOutcome(STATUS_SURVIVES, None, adm)


# -- whole-range reports -------------------------------------------------------


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SEDF_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _range_report(args: tuple[int, int]) -> list[tuple[ParamSet, FilterOutcome]]:
    lo, hi = args
    out = []
    for ps in enumerate_candidates(hi):
        if ps.v >= lo:
            out.append((ps, apply_filters(ps)))
    return out


def sieve_report(
    v_max: int, workers: Optional[int] = None, v_cap: int = HARD_V_CAP
) -> list[tuple[ParamSet, FilterOutcome]]:
    """Filter every candidate with v <= v_max; deterministic (v, m, k) order."""
    if v_max > v_cap:
        raise ValueError(f"v_max={v_max} exceeds the configured cap {v_cap}")
    nproc = _worker_count(workers)
    if nproc <= 1 or v_max < 100:
        return [(ps, apply_filters(ps)) for ps in enumerate_candidates(v_max)]
    import multiprocessing

    chunks = []
    span = max(1, (v_max - 3) // (4 * nproc))
    lo = 4
    while lo <= v_max:
        hi = min(v_max, lo + span - 1)
        chunks.append((lo, hi))
        lo = hi + 1
    with multiprocessing.Pool(processes=nproc) as pool:
        parts = pool.map(_range_report, chunks)
    return [row for part in parts for row in part]


def format_csv_row(ps: ParamSet, outcome: FilterOutcome) -> str:
    adm = ";".join(str(x.a) for x in outcome.admissible)
    fid = outcome.filter_id or ""
    return f"{ps.v},{ps.m},{ps.k},{ps.lam},{outcome.status},{fid},{adm}"


def write_csv(rows: Iterable[tuple[ParamSet, FilterOutcome]], fh: TextIO) -> None:
    fh.write(CSV_HEADER + "\n")
    for ps, outcome in rows:
        fh.write(format_csv_row(ps, outcome) + "\n")


def read_table_csv(path) -> list[dict]:
    """Read a sieve/fixture CSV; '#' lines and blanks are skipped."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header: Optional[list[str]] = None
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if header is None:
                header = line.split(",")
                continue
            parts = line.split(",")
            row = dict(zip(header, parts))
            rows.append(row)
    return rows


def diff_against_fixtures(
    report: list[tuple[ParamSet, FilterOutcome]], fixture_paths: dict[str, object]
) -> list[str]:
    """Compare a report with fixture CSVs on (status, filter_id); return mismatches."""
    by_key = {ps.key(): (ps, outcome) for ps, outcome in report}
    problems = []
    for name, path in sorted(fixture_paths.items()):
        for row in read_table_csv(path):
            key = (int(row["v"]), int(row["m"]), int(row["k"]))
            want_status = row["status"]
            want_filter = row.get("filter_id", "") or ""
            got = by_key.get(key)
            if got is None:
                problems.append(f"{name}: candidate {key} missing from report")
                continue
            _ps, outcome = got
            got_filter = outcome.filter_id or ""
            if outcome.status != want_status or got_filter != want_filter:
                problems.append(
                    f"{name}: {key} expected {want_status}/{want_filter or '-'}, "
                    f"got {outcome.status}/{got_filter or '-'}"
                )
    return problems


# -- group-level advisories ----------------------------------------------------

ADVISORY_CYCLIC_PRIME_POWER = "cyclic-prime-power: no family with more than two subsets"
ADVISORY_P3_NON_ELEMENTARY = "order p^3 with exponent p^2: no family with more than two subsets"
ADVISORY_P3_ELEMENTARY = "elementary abelian of order p^3: constrained by the cube-case conditions"


def group_advisory(group: AbelianGroup) -> list[str]:
    """Nonexistence facts that depend on the group, not just its order."""
    fac = factorize(group.order) if group.order > 1 else ()
    out = []
    if fac and all(p == fac[0] for p in fac):
        p = fac[0]
        if group.exponent == group.order:
            out.append(ADVISORY_CYCLIC_PRIME_POWER)
        if len(fac) == 3:
            if group.exponent == p * p:
                out.append(ADVISORY_P3_NON_ELEMENTARY)
            elif group.exponent == p:
                out.append(ADVISORY_P3_ELEMENTARY)
    return out
