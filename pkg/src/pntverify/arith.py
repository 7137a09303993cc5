"""Exact arithmetic functions on positive integers.

Everything here is integer-exact except mangoldt, which returns a float
(natural-log units). Prime-power detection is done on integers only, so
values near perfect powers are never misclassified. All functions reject
n = 0 with a ValueError; the sums these feed range over positive integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def _require_positive(n: int, what: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n}")


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization p1^j1 * ... * ps^js.

    ``pairs`` is sorted strictly ascending by prime; the empty tuple
    represents n = 1.
    """

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        """Reconstruct the factored number."""
        out = 1
        for p, j in self.pairs:
            out *= p**j
        return out

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def is_squarefree(self) -> bool:
        return all(j == 1 for _, j in self.pairs)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n >= 1 by trial division up to sqrt(n)."""
    _require_positive(n)
    pairs = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            j = 0
            while m % p == 0:
                m //= p
                j += 1
            pairs.append((p, j))
    d = 5
    while d * d <= m:
        # wheel over 6k +/- 1
        for q in (d, d + 2):
            if m % q == 0:
                j = 0
                while m % q == 0:
                    m //= q
                    j += 1
                pairs.append((q, j))
        d += 6
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def multiplicity(p: int, n: int) -> int:
    """Largest e with p^e dividing n. Rejects non-prime p and n = 0."""
    _require_positive(n)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def radical(n: int) -> int:
    """Greatest squarefree number dividing n (product of its distinct primes)."""
    _require_positive(n)
    out = 1
    for p in factorize(n).primes:
        out *= p
    return out


def moebius(n: int) -> int:
    """Moebius mu: (-1)^s for squarefree n with s prime factors, else 0."""
    _require_positive(n)
    f = factorize(n)
    if not f.is_squarefree():
        return 0
    return -1 if len(f.pairs) % 2 else 1


def mangoldt(n: int) -> float:
    """Von Mangoldt Lambda: ln p if n = p^a with a >= 1, else 0."""
    _require_positive(n)
    f = factorize(n)
    if len(f.pairs) == 1:
        return math.log(f.pairs[0][0])
    return 0.0


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, j in factorize(n).pairs:
        divs = [d * p**e for d in divs for e in range(j + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _require_positive(n)
    return list(_divisors(n))
