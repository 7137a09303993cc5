"""Divisor-sum identities and summation transforms.

Each identity is exposed as a pair of operations computing both sides, so
tests can assert equality. Integer and Fraction inputs stay exact; the
identities are algebraic, and exact comparison catches logic bugs that a
tolerance would hide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import tables
from .arith import divisors, moebius


@dataclass(frozen=True)
class TabulatedFunction:
    """A function on 1..limit stored as a value table.

    ``exact`` tags tables whose values are closed under ring operations
    (ints or Fractions) versus float-valued tables.
    """

    limit: int
    values: tuple
    exact: bool = True

    def __post_init__(self):
        if self.limit < 1 or len(self.values) != self.limit:
            raise ValueError("values must cover exactly 1..limit")

    @classmethod
    def from_callable(cls, limit: int, func: Callable, exact: bool = True):
        return cls(limit, tuple(func(m) for m in range(1, limit + 1)), exact)

    def __call__(self, m: int):
        if not 1 <= m <= self.limit:
            raise ValueError(f"argument {m} outside tabulated domain 1..{self.limit}")
        return self.values[m - 1]


def _check_domain(n: int, f) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if isinstance(f, TabulatedFunction) and n > f.limit:
        raise ValueError(f"n = {n} exceeds tabulated domain limit {f.limit}")


def divisor_sum(n: int, f) -> object:
    """Sum of f(d) over the divisors d of n."""
    _check_domain(n, f)
    return sum(f(d) for d in divisors(n))


def divisor_sum_reflected(n: int, f) -> object:
    """Sum of f(n/d) over the divisors d of n; equals divisor_sum(n, f)."""
    _check_domain(n, f)
    return sum(f(n // d) for d in divisors(n))


def triangle_sum_lhs(n: int, f: Callable[[int, int], object]) -> object:
    """Sum of f(d, d') over pairs with d*d' <= n, enumerated by rows d."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return sum(f(d, dp) for d in range(1, n + 1) for dp in range(1, n // d + 1))


def triangle_sum_rhs(n: int, f: Callable[[int, int], object]) -> object:
    """Same pairs enumerated by product c <= n and divisor d of c."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return sum(f(d, c // d) for c in range(1, n + 1) for d in divisors(c))


def divisor_pair_sum_lhs(n: int, f: Callable[[int, int], object]) -> object:
    """Sum of f(d, d') over pairs with d*d' dividing n, by d then d'."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return sum(f(d, dp) for d in divisors(n) for dp in divisors(n // d))


def divisor_pair_sum_rhs(n: int, f: Callable[[int, int], object]) -> object:
    """Same pairs enumerated by product c | n and divisor d of c."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return sum(f(d, c // d) for c in divisors(n) for d in divisors(c))


def moebius_divisor_sum(n: int) -> int:
    """Sum of mu(d) over d | n: 1 for n = 1, else 0."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return sum(moebius(d) for d in divisors(n))


def moebius_divisor_sums(limit: int) -> np.ndarray:
    """Bulk table of sum_{d|n} mu(d) for n = 0..limit (entry 0 is 0)."""
    if limit < 1:
        raise ValueError(f"limit must be a positive integer, got {limit}")
    mu = tables.moebius_sieve(limit)
    s = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        s[d::d] += mu[d]
    return s


def moebius_invert(f, n: int):
    """Recover g(n) from f(m) = sum_{d|m} g(d) via sum_{d|n} mu(d) f(n/d)."""
    _check_domain(n, f)
    return sum(moebius(d) * f(n // d) for d in divisors(n))


def _partial_sums(f, upto: int) -> list:
    F = [0]
    for i in range(1, upto + 1):
        F.append(F[-1] + f(i))
    return F


def partial_summation_lhs(f, G, a: int, b: int):
    """Sum of f(n+1) G(n+1) for n = a..b."""
    if not 0 <= a <= b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    return sum(f(n + 1) * G(n + 1) for n in range(a, b + 1))


def partial_summation_rhs(f, G, a: int, b: int):
    """Abel-summed form: F(b+1)G(b+1) - F(a)G(a+1) - sum F(n+1)(G(n+2)-G(n+1))."""
    if not 0 <= a <= b:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    F = _partial_sums(f, b + 1)
    tail = sum(F[n + 1] * (G(n + 2) - G(n + 1)) for n in range(a, b))
    return F[b + 1] * G(b + 1) - F[a] * G(a + 1) - tail
