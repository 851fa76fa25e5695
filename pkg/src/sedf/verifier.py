"""Decide whether disjoint subsets of an abelian group form an SEDF.

The accept/reject path is definition-first: integer tallies of external
differences, checked cell by cell.  Character-theoretic machinery (the exact
cyclotomic route) is provided separately, both as an independent criterion
for cross-checking and as a diagnostic profile of the family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from sedf.cyclotomic import Cyclotomic
from sedf.groups import AbelianGroup, Element

CLASS_ZERO = "ZERO"
CLASS_NONZERO = "NONZERO"


class FamilyError(ValueError):
    """Structural problem with a family (overlap, ragged sizes, bad coords)."""


@dataclass(frozen=True)
class Family:
    """A group together with m pairwise-disjoint k-subsets."""

    group: AbelianGroup
    sets: tuple[tuple[Element, ...], ...]

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def k(self) -> int:
        return len(self.sets[0]) if self.sets else 0

    @property
    def v(self) -> int:
        return self.group.order

    def union(self) -> tuple[Element, ...]:
        return tuple(x for s in self.sets for x in s)

    def params(self) -> tuple[int, int, int]:
        return (self.v, self.m, self.k)


def make_family(group: AbelianGroup, sets) -> Family:
    """Validate and freeze a family; raises FamilyError on structural faults."""
    frozen = tuple(tuple(tuple(x) for x in s) for s in sets)
    m = len(frozen)
    if m < 2:
        raise FamilyError(f"a family needs at least 2 subsets, got {m}")
    k = len(frozen[0])
    if k < 1:
        raise FamilyError("subsets must be nonempty")
    seen: set[Element] = set()
    for i, s in enumerate(frozen, start=1):
        if len(s) != k:
            raise FamilyError(f"subset {i} has size {len(s)}, expected {k}")
        for x in s:
            if len(x) != len(group.factors):
                raise FamilyError(
                    f"element {x} has {len(x)} coordinates, group has {len(group.factors)}"
                )
            if any(c < 0 or c >= n for c, n in zip(x, group.factors)):
                raise FamilyError(f"element {x} out of range for factors {group.factors}")
            if x in seen:
                raise FamilyError(f"element {x} appears in more than one subset")
            seen.add(x)
    if m * k > group.order:
        raise FamilyError(f"{m} subsets of size {k} cannot be disjoint in a group of order {group.order}")
    return Family(group, frozen)


@dataclass(frozen=True)
class VerifyReport:
    is_sedf: bool
    lam: Optional[int]
    witness: Optional[tuple[int, Element, int]]  # (j, g, count) of first bad cell
    v: int
    m: int
    k: int

    def params(self) -> Optional[tuple[int, int, int, int]]:
        if self.lam is None:
            return None
        return (self.v, self.m, self.k, self.lam)


def _eq2_lambda(v: int, m: int, k: int) -> Optional[int]:
    """lambda forced by (m-1) k^2 = lambda (v-1), or None if non-integral."""
    num = (m - 1) * k * k
    if v <= 1 or num % (v - 1):
        return None
    return num // (v - 1)


def external_tally(fam: Family, j: int) -> dict[Element, int]:
    """Count, for each g, the pairs (x, y) with x in D_j, y outside D_j, x - y = g."""
    if not 1 <= j <= fam.m:
        raise ValueError(f"subset index {j} out of range 1..{fam.m}")
    g = fam.group
    counts = [0] * g.order
    src = fam.sets[j - 1]
    for i, other in enumerate(fam.sets, start=1):
        if i == j:
            continue
        for y in other:
            ny = g.inverse(y)
            for x in src:
                counts[g.rank(g.op(x, ny))] += 1
    return {g.unrank(r): c for r, c in enumerate(counts)}


def verify_sedf(fam: Family) -> VerifyReport:
    """Definition-level check: every external tally constant lambda off the identity.

    The witness is the first cell (by subset index, then element rank) whose
    count exceeds lambda; per-subset totals are fixed at (m-1)k^2, so when
    lambda is integral a tally nowhere above lambda is constant.  When lambda
    is not even integral the witness is the first cell breaking constancy.
    """
    g = fam.group
    v, m, k = fam.params()
    lam = _eq2_lambda(v, m, k)
    for j in range(1, m + 1):
        tally = external_tally(fam, j)
        ranked = [tally[g.unrank(r)] for r in range(v)]
        if lam is None:
            ref = ranked[1]
            for r in range(2, v):
                if ranked[r] != ref:
                    return VerifyReport(False, None, (j, g.unrank(r), ranked[r]), v, m, k)
            # a constant tally would force lambda integral, so this is unreachable
            raise AssertionError("constant tally with non-integral lambda")
        for r in range(1, v):
            if ranked[r] > lam:
                return VerifyReport(False, None, (j, g.unrank(r), ranked[r]), v, m, k)
    if lam is None or lam < 1:
        return VerifyReport(False, None, None, v, m, k)
    return VerifyReport(True, lam, None, v, m, k)


# -- character route ---------------------------------------------------------


def _char_values(fam: Family, chi) -> list[Cyclotomic]:
    """chi(D_i) for every subset, as exact cyclotomic sums."""
    g = fam.group
    n = g.exponent
    return [
        Cyclotomic.from_indices(n, (g.char_eval_index(chi, x) for x in s))
        for s in fam.sets
    ]


def sedf_by_characters(fam: Family) -> bool:
    """Independent SEDF criterion: the defining identity under every character.

    Accepts iff lambda is a positive integer and, for every nonprincipal chi
    and every j, chi(D_j) * conj(chi(D) - chi(D_j)) = -lambda exactly.
    Shares no code with the tally route.
    """
    g = fam.group
    v, m, k = fam.params()
    lam = _eq2_lambda(v, m, k)
    if lam is None or lam < 1:
        return False
    n = g.exponent
    principal = (0,) * len(g.factors)
    for chi in g.all_characters():
        if chi == principal:
            continue
        values = _char_values(fam, chi)
        total = Cyclotomic.zero(n)
        for val in values:
            total = total + val
        total_c = total.conj()
        for val in values:
            prod = val * (total_c - val.conj())
            if prod.as_integer() != -lam:
                return False
    return True


@dataclass(frozen=True)
class CharacterEntry:
    chi: tuple[int, ...]
    order: int
    cls: str  # CLASS_ZERO or CLASS_NONZERO
    norm_d: Optional[int]  # |chi(D)|^2 when integral
    norms: tuple[Optional[int], ...]  # |chi(D_i)|^2 per subset, None if irrational
    a_chi: Optional[int]
    ell_chi: Optional[int]
    eq_identity_ok: bool  # chi(D_j)(conj chi(D) - conj chi(D_j)) == -lambda for all j


@dataclass(frozen=True)
class CharacterProfile:
    lam: Optional[int]
    is_sedf: bool
    entries: tuple[CharacterEntry, ...]
    violations: tuple[str, ...] = field(default=())

    @property
    def n_zero(self) -> int:
        return sum(1 for e in self.entries if e.cls == CLASS_ZERO)

    @property
    def n_nonzero(self) -> int:
        return sum(1 for e in self.entries if e.cls == CLASS_NONZERO)

    @property
    def a(self) -> Optional[int]:
        vals = [e.a_chi for e in self.entries if e.cls == CLASS_NONZERO and e.a_chi is not None]
        return min(vals) if vals else None


def char_profile(fam: Family) -> CharacterProfile:
    """Per-character diagnostic: class, squared moduli, minima, identity checks.

    For a verified SEDF the profile also validates the structural facts the
    squared moduli must obey (integrality for m > 2, the two-value shape,
    divisibility of the minimum, and the counting identity tying the number
    of minima to m); any failure lands in ``violations``.  Non-SEDF input
    still gets raw norms, with irrational ones reported as None.
    """
    g = fam.group
    v, m, k = fam.params()
    report = verify_sedf(fam)
    lam = report.lam if report.is_sedf else _eq2_lambda(v, m, k)
    n = g.exponent
    principal = (0,) * len(g.factors)

    entries = []
    for chi in g.all_characters():
        if chi == principal:
            continue
        values = _char_values(fam, chi)
        total = Cyclotomic.zero(n)
        for val in values:
            total = total + val
        norms = tuple(val.norm_sq().as_integer() for val in values)
        norm_d = total.norm_sq().as_integer()
        cls = CLASS_ZERO if total.is_zero() else CLASS_NONZERO
        eq_ok = False
        if lam is not None:
            total_c = total.conj()
            eq_ok = all(
                (val * (total_c - val.conj())).as_integer() == -lam for val in values
            )
        a_chi = ell_chi = None
        if all(x is not None for x in norms):
            a_chi = min(norms)
            ell_chi = sum(1 for x in norms if x == a_chi)
        entries.append(
            CharacterEntry(chi, g.char_order(chi), cls, norm_d, norms, a_chi, ell_chi)
        )

    violations: list[str] = []
    if report.is_sedf:
        assert lam is not None
        for e in entries:
            where = f"chi={e.chi}"
            if not e.eq_identity_ok:
                violations.append(f"{where}: defining character identity fails")
            if e.cls == CLASS_ZERO and any(x != lam for x in e.norms):
                violations.append(f"{where}: chi(D)=0 but some |chi(D_i)|^2 != lambda")
            if m > 2:
                if any(x is None for x in e.norms):
                    violations.append(f"{where}: irrational |chi(D_i)|^2 with m > 2")
                elif e.cls == CLASS_NONZERO:
                    a = e.a_chi
                    assert a is not None and e.ell_chi is not None
                    if not (0 < a < lam):
                        violations.append(f"{where}: min norm {a} not in (0, lambda)")
                    elif (lam * lam) % a or any(x not in (a, lam * lam // a) for x in e.norms):
                        violations.append(f"{where}: norms not of the two-value shape")
                    else:
                        d = _gcd(lam, a)
                        if (d * d) % a:
                            violations.append(f"{where}: min norm does not divide gcd^2")
                        if not (m < 2 * e.ell_chi <= 2 * (m - 2)):
                            violations.append(f"{where}: minima count {e.ell_chi} out of range")
                        if (e.ell_chi - 1) * (lam + a) != lam * (m - 2):
                            violations.append(f"{where}: minima counting identity fails")
        if m > 2 and k > 1 and all(e.cls == CLASS_ZERO for e in entries):
            violations.append("no nonprincipal character with chi(D) != 0")

    return CharacterProfile(lam, report.is_sedf, tuple(entries), tuple(violations))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def self_difference_tally(fam: Family, i: int) -> dict[Element, int]:
    """Coefficients of D_i * D_i^(-1) by direct enumeration of differences."""
    if not 1 <= i <= fam.m:
        raise ValueError(f"subset index {i} out of range 1..{fam.m}")
    g = fam.group
    counts = [0] * g.order
    s = fam.sets[i - 1]
    for x in s:
        for y in s:
            counts[g.rank(g.subtract(x, y))] += 1
    return {g.unrank(r): c for r, c in enumerate(counts)}


def fourier_roundtrip(fam: Family, i: int) -> dict[Element, int]:
    """Rebuild the coefficients of D_i * D_i^(-1) from character values.

    Uses the inversion formula a_g = (1/v) sum over chi of chi(X) chi(g)^{-1}
    with X = D_i D_i^(-1), everything exact; the sum must come out as an
    integer multiple of v for every g.
    """
    if not 1 <= i <= fam.m:
        raise ValueError(f"subset index {i} out of range 1..{fam.m}")
    g = fam.group
    v = g.order
    n = g.exponent
    s = fam.sets[i - 1]
    chars = list(g.all_characters())
    norms = []
    for chi in chars:
        val = Cyclotomic.from_indices(n, (g.char_eval_index(chi, x) for x in s))
        norms.append(val.norm_sq())
    out: dict[Element, int] = {}
    for target in g.elements():
        acc = [0] * n
        for chi, norm in zip(chars, norms):
            shift = (-g.char_eval_index(chi, target)) % n
            cs = norm.coeffs
            for idx, c in enumerate(cs):
                if c:
                    pos = idx + shift
                    if pos >= n:
                        pos -= n
                    acc[pos] += c
        total = Cyclotomic(n, acc).as_integer()
        if total is None or total % v:
            raise AssertionError("Fourier inversion produced a non-integer coefficient")
        out[target] = total // v
    return out


def orbit_constant(fam: Family, coeffs: dict[Element, int]) -> bool:
    """True if the coefficient map is constant on each rational-conjugacy orbit."""
    g = fam.group
    seen: set[Element] = set()
    for x in coeffs:
        if x in seen:
            continue
        orb = g.orbit(x)
        seen |= orb
        vals = {coeffs[y] for y in orb}
        if len(vals) > 1:
            return False
    return True
