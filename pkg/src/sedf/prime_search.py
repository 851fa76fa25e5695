"""Prime scan for the open cube-of-a-prime case.

The key arithmetic fact: (p^2 + p + 1)/3 is a perfect square s^2 exactly when
x = 2p + 1 solves the Pell-type equation x^2 - 12 s^2 = -3.  Walking that
equation's solution chain replaces a brute scan over p and makes the
3 * 10^12 range take milliseconds; a direct scan over s is kept as an
independent cross-check.  Prime survivors are then pushed through the full
set of constraints a (p^3, m, k, lambda) family would have to satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sedf.arith import is_prime

VERDICT_ELIMINATED = "ELIMINATED"
VERDICT_OPEN = "OPEN"


@dataclass(frozen=True)
class PellSolution:
    """Positive solution of x^2 - 12 s^2 = -3."""

    x: int
    s: int

    @property
    def p(self) -> int:
        return (self.x - 1) // 2

    def check(self) -> bool:
        return self.x * self.x - 12 * self.s * self.s == -3


def pell_chain(bound: int) -> list[PellSolution]:
    """All chain solutions with (x-1)/2 <= bound, from seed (3, 1).

    The step (x, s) -> (7x + 24s, 2x + 7s) applies the fundamental unit of
    the x^2 - 12 s^2 form; completeness against a brute scan is a tested
    property, not an assumption.
    """
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    out = []
    x, s = 3, 1
    while (x - 1) // 2 <= bound:
        sol = PellSolution(x, s)
        assert sol.check()
        out.append(sol)
        x, s = 7 * x + 24 * s, 2 * x + 7 * s
    return out


def pell_brute(s_max: int) -> list[PellSolution]:
    """Direct scan: every s <= s_max with 12 s^2 - 3 a perfect square."""
    out = []
    for s in range(1, s_max + 1):
        t = 12 * s * s - 3
        x = isqrt(t)
        if x * x == t:
            out.append(PellSolution(x, s))
    return out


def candidate_primes(bound: int) -> list[tuple[int, int]]:
    """Primes p <= bound with (p^2 + p + 1)/3 = s^2, as (p, s) pairs."""
    if bound >= 1 << 63:
        raise ValueError(f"bound must fit in a signed 64-bit word, got {bound}")
    out = []
    for sol in pell_chain(bound):
        p = sol.p
        if p >= 2 and is_prime(p):
            out.append((p, sol.s))
    return sorted(out)


@dataclass(frozen=True)
class P3Candidate:
    p: int
    s: int
    surviving_m: tuple[int, ...]  # m passing every parameter constraint
    open_m: tuple[int, ...]  # of those, m also passing (p-1) | (k^2 - k)
    verdict: str


def theorem33_parameters(p: int, s: int, m: int) -> tuple[int, int, int] | None:
    """(k, lambda, a) for a hypothetical (p^3, m, ...) family, or None.

    Requires m >= 4 (m = 3 can never satisfy the divisibility below) and
    checks: 3(m-1)(m-3) | (p-1), k = p(p-1)s/(m-1) integral,
    lambda = p^2(p-1)/(3(m-1)), a = lambda/(m-3) integral,
    lambda < k < 2 lambda, and mk <= p^3.
    """
    if m < 4:
        return None
    if (p - 1) % (3 * (m - 1) * (m - 3)):
        return None
    if (p * (p - 1) * s) % (m - 1):
        return None
    k = p * (p - 1) * s // (m - 1)
    lam = p * p * (p - 1) // (3 * (m - 1))
    if lam % (m - 3):
        return None
    a = lam // (m - 3)
    # re-derived identities; divisibility above makes these exact
    assert (m - 1) * k * k == lam * (p**3 - 1)
    assert a * (m - 3) == lam
    if not lam < k < 2 * lam:
        return None
    if m * k > p**3:
        return None
    return k, lam, a


def lemma_internal_difference_ok(p: int, k: int) -> bool:
    """(p-1) | (k^2 - k), via k reduced modulo p-1."""
    kr = k % (p - 1)
    return (kr * kr - kr) % (p - 1) == 0


def p3_pipeline(p: int, s: int) -> P3Candidate:
    """Run every (p^3, m) parameter constraint for one candidate prime.

    Stage one is the residue gate p = 1 (mod 12); stage two enumerates all m
    passing the divisibility and size constraints of ``theorem33_parameters``;
    stage three keeps those whose k also satisfies (p-1) | (k^2 - k).  The
    verdict is OPEN only if some m clears all three stages.
    """
    if p * p + p + 1 != 3 * s * s:
        raise ValueError(f"(p^2+p+1)/3 != s^2 for p={p}, s={s}")
    if p % 12 != 1:
        return P3Candidate(p, s, (), (), VERDICT_ELIMINATED)
    surviving = []
    open_m = []
    m_cap = isqrt((p - 1) // 3 + 1) + 3
    for m in range(4, m_cap + 1):
        params = theorem33_parameters(p, s, m)
        if params is None:
            continue
        k, _lam, _a = params
        surviving.append(m)
        if lemma_internal_difference_ok(p, k):
            open_m.append(m)
    verdict = VERDICT_OPEN if open_m else VERDICT_ELIMINATED
    return P3Candidate(p, s, tuple(surviving), tuple(open_m), verdict)
