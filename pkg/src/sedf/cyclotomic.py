"""Exact arithmetic in Z[zeta_n], the ring of integers extended by an n-th root of unity.

Values are integer coefficient vectors over the powers zeta^0 .. zeta^{n-1},
i.e. elements of Z[x]/(x^n - 1).  That quotient is larger than Z[zeta_n], so
equality is only ever decided after canonical reduction modulo the n-th
cyclotomic polynomial; raw coefficient vectors are never compared directly.
No floating point enters any comparison.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, leading coefficient 1."""
    if n < 1:
        raise ValueError(f"root order must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    # Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials; den must be monic and divide num."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for t, dc in enumerate(den):
                num[i - dd + t] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


class Cyclotomic:
    """An element of Z[zeta_n] stored as coefficients over zeta^0 .. zeta^{n-1}."""

    __slots__ = ("n", "coeffs", "_canon")

    def __init__(self, n: int, coeffs: Iterable[int]):
        if n < 1:
            raise ValueError(f"root order must be >= 1, got {n}")
        cs = tuple(coeffs)
        if len(cs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(cs)}")
        self.n = n
        self.coeffs = cs
        self._canon: tuple[int, ...] | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Cyclotomic":
        return cls(n, (0,) * n)

    @classmethod
    def from_int(cls, n: int, c: int) -> "Cyclotomic":
        return cls(n, (c,) + (0,) * (n - 1))

    @classmethod
    def root(cls, n: int, j: int) -> "Cyclotomic":
        coeffs = [0] * n
        coeffs[j % n] = 1
        return cls(n, coeffs)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Cyclotomic":
        """Sum of zeta^j over a multiset of exponents j."""
        if n < 1:
            raise ValueError(f"root order must be >= 1, got {n}")
        coeffs = [0] * n
        for j in indices:
            coeffs[j % n] += 1
        return cls(n, coeffs)

    # -- ring operations ----------------------------------------------------

    def _match(self, other: "Cyclotomic") -> None:
        if self.n != other.n:
            raise ValueError(f"mixed root orders {self.n} and {other.n}")

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._match(other)
        return Cyclotomic(self.n, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._match(other)
        return Cyclotomic(self.n, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.n, (other * a for a in self.coeffs))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        self._match(other)
        n = self.n
        out = [0] * n
        b = other.coeffs
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        idx = i + j
                        if idx >= n:
                            idx -= n
                        out[idx] += ai * bj
        return Cyclotomic(n, out)

    __rmul__ = __mul__

    def times_root(self, t: int) -> "Cyclotomic":
        """Multiply by zeta^t (a cyclic shift of the coefficient vector)."""
        n = self.n
        t %= n
        if t == 0:
            return self
        return Cyclotomic(n, self.coeffs[n - t :] + self.coeffs[: n - t])

    def conj(self) -> "Cyclotomic":
        """Complex conjugate: sends zeta^j to zeta^{-j}."""
        n = self.n
        out = [0] * n
        for j, c in enumerate(self.coeffs):
            out[(n - j) % n] = c
        return Cyclotomic(n, out)

    def norm_sq(self) -> "Cyclotomic":
        """Squared modulus a * conj(a)."""
        return self * self.conj()

    # -- canonical form and comparisons --------------------------------------

    def canonical(self) -> tuple[int, ...]:
        """Remainder modulo Phi_n; length is the degree of Phi_n."""
        if self._canon is None:
            phi = cyclotomic_polynomial(self.n)
            deg = len(phi) - 1
            rem = list(self.coeffs)
            for i in range(len(rem) - 1, deg - 1, -1):
                c = rem[i]
                if c:
                    off = i - deg
                    for t, pc in enumerate(phi):
                        rem[off + t] -= c * pc
            self._canon = tuple(rem[:deg])
        return self._canon

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def as_integer(self) -> int | None:
        """The rational integer this value equals, if it is one."""
        canon = self.canonical()
        if any(canon[1:]):
            return None
        return canon[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.as_integer() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash((self.n, self.canonical()))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{j}" for j, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic(n={self.n}, {body})"


def root_of_unity_order(n: int, j: int) -> int:
    """Multiplicative order of zeta_n^j."""
    return n // gcd(n, j % n)
