"""Selberg symmetry formula, the error-term inequality, and the iteration.

The symmetry sum S(x) = sum_{n<=x} Lambda(n) ln n + sum_{n<=x} (Lambda*Lambda)(n)
satisfies S(x) = 2x ln x + O(x); the error inequality bounds |R(x)| ln^2 x
by twice a weighted sum of |R(x/n)|. Both constants below are regression
values pinned by a pre-build scan, not derived symbolically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from weakref import WeakKeyDictionary

import numpy as np

from .asymptotics import BigOClaim, BigOReport, SampleGrid, check_claim
from .tables import ChebyshevTables

# sup over integer x in [2, 1e5] of |S(x) - 2x ln x| / x
SELBERG_SUP_CONSTANT = 3.2070031246855466

# slack sup of (|R(x)| ln^2 x - 2 sum |R(x/n)| ln n) / (x ln x) on [2, 1e4]
# is -0.54708 at x = 2; pinned just above.
R_SLACK_CONSTANT = -0.547

_PREFIX_CACHE: WeakKeyDictionary = WeakKeyDictionary()


def symmetry_prefix(t: ChebyshevTables, limit: int) -> np.ndarray:
    """Cumulative sums of Lambda(n) ln n + sum_{d|n} Lambda(d) Lambda(n/d).

    The convolution is accumulated by enumerating prime-power pairs with
    product <= limit; adequate to 1e5-scale limits within seconds.
    """
    if not 1 <= limit <= t.limit:
        raise ValueError(f"limit must be in [1, {t.limit}], got {limit}")
    cached = _PREFIX_CACHE.get(t)
    if cached is not None and len(cached) > limit:
        return cached

    lam = t.lam[: limit + 1]
    pp = np.flatnonzero(lam)  # prime powers
    conv = np.zeros(limit + 1)
    for d in pp:
        d = int(d)
        m = pp[pp <= limit // d]
        conv[d * m] += lam[d] * lam[m]

    n = np.arange(limit + 1, dtype=np.float64)
    n[0] = 1.0
    terms = lam * np.log(n) + conv
    prefix = np.cumsum(terms.astype(np.longdouble)).astype(np.float64)
    prefix.flags.writeable = False
    _PREFIX_CACHE[t] = prefix
    return prefix


def selberg_lhs(x: float, t: ChebyshevTables) -> float:
    """The two-term symmetry sum S(x), per the floor convention."""
    if not 1 <= x <= t.limit:
        raise ValueError(f"x must be in [1, {t.limit}], got {x}")
    m = math.floor(x)
    return float(symmetry_prefix(t, m)[m])


def selberg_check(
    t: ChebyshevTables, grid: SampleGrid, constant: float = SELBERG_SUP_CONSTANT
) -> BigOReport:
    """Check |S(x) - 2x ln x| <= constant * x over the grid."""
    if grid.hi > t.limit:
        raise ValueError(f"grid upper end {grid.hi} exceeds table limit {t.limit}")
    prefix = symmetry_prefix(t, grid.hi)
    claim = BigOClaim(
        "selberg_symmetry",
        lhs=lambda x: prefix[np.floor(x).astype(np.int64)],
        rhs_main=lambda x: 2 * x * np.log(x),
        rhs_bound=lambda x: x,
        constant=constant,
        threshold=max(grid.lo, 2),
    )
    return check_claim(claim, grid)


def r_inequality_check(
    t: ChebyshevTables, xs: list[int], constant: float = R_SLACK_CONSTANT
) -> BigOReport:
    """Check |R(x)| ln^2 x - 2 sum_{n<=x} |R(x/n)| ln n <= constant * x ln x.

    The report's sup_ratio is the largest signed slack divided by x ln x;
    the verdict passes when that sup stays at or below ``constant``.
    """
    if not xs:
        raise ValueError("xs must be nonempty")
    ratios = []
    for x in xs:
        if not 2 <= x <= t.limit:
            raise ValueError(f"each x must be in [2, {t.limit}], got {x}")
        n = np.arange(1, x + 1, dtype=np.float64)
        q = x / n
        r_abs = np.abs(t.psi_prefix[np.floor(q).astype(np.int64)] - q)
        rhs_sum = 2.0 * float(np.sum(r_abs * np.log(n)))
        lhs = abs(t.psi_prefix[x] - x) * math.log(x) ** 2
        ratios.append((lhs - rhs_sum) / (x * math.log(x)))
    i = int(np.argmax(ratios))
    sup = float(ratios[i])
    verdict = "pass" if sup <= constant else "fail"
    return BigOReport(verdict, sup, float(xs[i]), len(xs))


@dataclass(frozen=True)
class IterationTrace:
    """Trace of a_{n+1} = a_n - k a_n^3, positive when k a_1^2 < 1."""

    k: float
    values: tuple[float, ...]


def iterate_bound(a1: float, k: float, steps: int) -> IterationTrace:
    """Run the cubic-damping iteration for the given number of terms."""
    if a1 <= 0:
        raise ValueError(f"a1 must be positive, got {a1}")
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if k * a1 * a1 >= 1:
        raise ValueError(f"need k * a1^2 < 1 to keep the sequence positive")
    if steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps}")
    values = [a1]
    for _ in range(steps - 1):
        a = values[-1]
        values.append(a - k * a * a * a)
    return IterationTrace(k=k, values=tuple(values))


@dataclass(frozen=True)
class PntRow:
    """One sample of the prime-number-theorem ratio table."""

    x: float
    pi: int
    theta: float
    psi: float
    pi_ratio: float
    theta_ratio: float
    psi_ratio: float
    r_error: float


def pnt_ratio_table(t: ChebyshevTables, xs: list[float]) -> list[PntRow]:
    """pi(x) ln x / x, theta(x)/x and psi(x)/x at each sample point."""
    rows = []
    for x in xs:
        if not 2 <= x <= t.limit:
            raise ValueError(f"each x must be in [2, {t.limit}], got {x}")
        m = math.floor(x)
        pi_x = int(t.pi_prefix[m])
        theta_x = float(t.theta_prefix[m])
        psi_x = float(t.psi_prefix[m])
        rows.append(
            PntRow(
                x=float(x),
                pi=pi_x,
                theta=theta_x,
                psi=psi_x,
                pi_ratio=pi_x * math.log(x) / x,
                theta_ratio=theta_x / x,
                psi_ratio=psi_x / x,
                r_error=psi_x - x,
            )
        )
    return rows
