"""Finite abelian groups given as explicit lists of cyclic factor orders.

Elements are residue tuples (one coordinate per factor, written additively)
and characters are exponent tuples of the same shape.  A character chi with
exponents ``e`` sends an element ``g`` to ``zeta_N ** char_eval_index(chi, g)``
where ``N`` is the group exponent, so character sums can be handed straight
to the exact cyclotomic layer.  Two factor lists that present isomorphic
groups are deliberately kept distinct; callers choose the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, lcm, prod
from typing import Iterator

from sedf.arith import factorize

Element = tuple[int, ...]
Character = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups C_{n_1} x ... x C_{n_r}."""

    factors: tuple[int, ...]

    @cached_property
    def order(self) -> int:
        return prod(self.factors)

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.factors) if self.factors else 1

    @cached_property
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        # mixed-radix strides for dense ranking; last coordinate varies fastest
        strides = []
        acc = 1
        for n in reversed(self.factors):
            strides.append(acc)
            acc *= n
        return tuple(reversed(strides))

    def _check(self, t: tuple[int, ...]) -> None:
        if len(t) != len(self.factors):
            raise ValueError(
                f"tuple {t} has {len(t)} coordinates, group has {len(self.factors)} factors"
            )

    def reduce(self, g: Element) -> Element:
        self._check(g)
        return tuple(c % n for c, n in zip(g, self.factors))

    def op(self, g: Element, h: Element) -> Element:
        self._check(g)
        self._check(h)
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def inverse(self, g: Element) -> Element:
        self._check(g)
        return tuple((-a) % n for a, n in zip(g, self.factors))

    def scale(self, t: int, g: Element) -> Element:
        self._check(g)
        return tuple((t * a) % n for a, n in zip(g, self.factors))

    def subtract(self, g: Element, h: Element) -> Element:
        return self.op(g, self.inverse(h))

    def element_order(self, g: Element) -> int:
        self._check(g)
        orders = [n // gcd(n, c) for c, n in zip(g, self.factors)]
        return lcm(*orders) if orders else 1

    def rank(self, g: Element) -> int:
        self._check(g)
        return sum(c * s for c, s in zip(g, self._strides))

    def unrank(self, r: int) -> Element:
        coords = []
        for s, n in zip(self._strides, self.factors):
            coords.append((r // s) % n)
        return tuple(coords)

    def elements(self) -> Iterator[Element]:
        return product(*(range(n) for n in self.factors))

    def orbit(self, g: Element) -> set[Element]:
        """Rational-conjugacy orbit {t*g : gcd(t, order) = 1}."""
        self._check(g)
        v = self.order
        return {self.scale(t, g) for t in range(1, v + 1) if gcd(t, v) == 1}

    # -- characters ---------------------------------------------------------

    def all_characters(self) -> Iterator[Character]:
        return product(*(range(n) for n in self.factors))

    def char_order(self, chi: Character) -> int:
        self._check(chi)
        orders = [n // gcd(n, e) for e, n in zip(chi, self.factors)]
        return lcm(*orders) if orders else 1

    def characters_of_order(self, n: int) -> Iterator[Character]:
        if n < 1 or self.exponent % n != 0:
            raise ValueError(f"{n} does not divide the group exponent {self.exponent}")
        return (chi for chi in self.all_characters() if self.char_order(chi) == n)

    def char_eval_index(self, chi: Character, g: Element) -> int:
        """Exponent j with chi(g) = zeta_N^j, N = group exponent."""
        self._check(chi)
        self._check(g)
        big_n = self.exponent
        total = 0
        for e, c, n in zip(chi, g, self.factors):
            total += e * c * (big_n // n)
        return total % big_n


def make_group(factors: list[int] | tuple[int, ...]) -> AbelianGroup:
    """Build a group from cyclic factor orders; each must be at least 2."""
    fac = tuple(int(n) for n in factors)
    for n in fac:
        if n < 2:
            raise ValueError(f"cyclic factor orders must be >= 2, got {n}")
    return AbelianGroup(fac)


def _partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n, parts descending."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def abelian_groups_of_order(v: int) -> list[AbelianGroup]:
    """One group per isomorphism class of abelian groups of order v."""
    if v < 1:
        raise ValueError(f"order must be positive, got {v}")
    if v == 1:
        return [AbelianGroup(())]
    fac = factorize(v)
    primes: list[tuple[int, int]] = []
    i = 0
    while i < len(fac):
        p = fac[i]
        e = 0
        while i < len(fac) and fac[i] == p:
            e += 1
            i += 1
        primes.append((p, e))
    per_prime = [[tuple(p**part for part in parts) for parts in _partitions(e)] for p, e in primes]
    groups = []
    for combo in product(*per_prime):
        factors = tuple(f for chunk in combo for f in chunk)
        groups.append(AbelianGroup(factors))
    return groups
