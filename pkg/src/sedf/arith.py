"""Integer helpers: factorization, squares, deterministic primality."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

# Deterministic Miller-Rabin witness set; correct for every n < 3.3 * 10^24,
# which comfortably covers the 2^64 inputs this package ever tests.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_U64_LIMIT = 1 << 64


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[int, ...]:
    """Prime factors of n with multiplicity, ascending (trial division)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_squarefree(n: int) -> bool:
    fac = factorize(n)
    return len(fac) == len(set(fac))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    fac = factorize(n)
    divs = [1]
    i = 0
    while i < len(fac):
        p = fac[i]
        e = 0
        while i < len(fac) and fac[i] == p:
            e += 1
            i += 1
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def _mr_witness(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality for n < 2^64 (Miller-Rabin, fixed bases)."""
    if n >= _U64_LIMIT:
        raise ValueError(f"primality test limited to n < 2^64, got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    return not any(_mr_witness(n, a) for a in _MR_BASES)
