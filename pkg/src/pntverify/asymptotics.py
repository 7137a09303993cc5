"""Big-O witness framework and the catalog of explicit-constant identities.

A claim |lhs(x) - rhs_main(x)| <= C * |rhs_bound(x)| is checked pointwise
on a grid of integers (plus midpoints for real-domain claims), for all
x >= the claim's threshold. The threshold stands in for "sufficiently
large x"; every constant is explicit, pinned as a regression value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import tables

# Reference value of Euler's constant, pinned by extrapolating H(N) - ln N.
EULER_GAMMA = 0.5772156649015329

CATALOG_NAMES = (
    "ln1p_recip",
    "harmonic_log",
    "stirling_log_sum",
    "log_over_n",
    "mertens",
    "euler_gamma",
)


@dataclass(frozen=True)
class SampleGrid:
    """Integer evaluation points [lo, hi], optionally with x + 1/2 midpoints."""

    lo: int
    hi: int
    include_midpoints: bool = False

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")

    def points(self) -> np.ndarray:
        xi = np.arange(self.lo, self.hi + 1, dtype=np.float64)
        if self.include_midpoints and len(xi) > 1:
            return np.sort(np.concatenate([xi, xi[:-1] + 0.5]))
        return xi


@dataclass(frozen=True)
class BigOClaim:
    """Claimed bound |lhs - rhs_main| <= constant * |rhs_bound| for x >= threshold.

    The function fields must accept numpy arrays.
    """

    name: str
    lhs: Callable[[np.ndarray], np.ndarray]
    rhs_main: Callable[[np.ndarray], np.ndarray]
    rhs_bound: Callable[[np.ndarray], np.ndarray]
    constant: float
    threshold: float
    domain: str = "reals"  # "integers" or "reals"

    def __post_init__(self):
        if self.constant <= 0 or not math.isfinite(self.threshold):
            raise ValueError("need constant > 0 and a finite threshold")
        if self.domain not in ("integers", "reals"):
            raise ValueError(f"unknown domain kind {self.domain!r}")


@dataclass(frozen=True)
class BigOReport:
    verdict: str  # "pass" | "fail"
    sup_ratio: float
    witness_x: float
    points_checked: int

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def check_claim(claim: BigOClaim, grid: SampleGrid) -> BigOReport:
    """Evaluate a claim over the grid; the witness is the first argmax."""
    x = grid.points()
    if claim.domain == "integers":
        x = x[x == np.floor(x)]
    x = x[x >= claim.threshold]
    if len(x) == 0:
        raise ValueError("no grid points at or above the claim threshold")

    lhs = np.asarray(claim.lhs(x), dtype=np.float64)
    main = np.asarray(claim.rhs_main(x), dtype=np.float64)
    bound = np.abs(np.asarray(claim.rhs_bound(x), dtype=np.float64))

    finite = np.isfinite(lhs) & np.isfinite(main) & np.isfinite(bound)
    if not finite.all():
        i = int(np.flatnonzero(~finite)[0])
        return BigOReport("fail", math.nan, float(x[i]), len(x))

    diff = np.abs(lhs - main)
    zero = bound == 0
    if np.any(zero) and np.any(diff[zero] != 0):
        i = int(np.flatnonzero(zero & (diff != 0))[0])
        return BigOReport("fail", math.inf, float(x[i]), len(x))

    if np.all(zero):
        return BigOReport("pass", 0.0, float(x[0]), len(x))

    ratio = diff[~zero] / bound[~zero]
    i = int(np.argmax(ratio))
    sup = float(ratio[i])
    witness = float(x[~zero][i])
    verdict = "pass" if sup <= claim.constant else "fail"
    return BigOReport(verdict, sup, witness, len(x))


def estimate_constant(f, g, grid: SampleGrid) -> tuple[float, float]:
    """Empirical constant: max |f(x)|/|g(x)| over the grid, with witness."""
    x = grid.points()
    gv = np.abs(np.asarray(g(x), dtype=np.float64))
    if np.any(gv == 0):
        i = int(np.flatnonzero(gv == 0)[0])
        raise ValueError(f"bound function vanishes at grid point x = {x[i]}")
    ratio = np.abs(np.asarray(f(x), dtype=np.float64)) / gv
    i = int(np.argmax(ratio))
    return float(ratio[i]), float(x[i])


def _prefix(terms: np.ndarray) -> np.ndarray:
    terms = terms.copy()
    terms[0] = 0.0
    return np.cumsum(terms.astype(np.longdouble)).astype(np.float64)


def _prefix_lookup(prefix: np.ndarray, limit: int):
    def lhs(x: np.ndarray) -> np.ndarray:
        if np.any(x > limit):
            raise ValueError(f"grid exceeds catalog limit {limit}")
        return prefix[np.floor(x).astype(np.int64)]

    return lhs


def identity_catalog(
    limit: int = 10**6, cheb: tables.ChebyshevTables | None = None
) -> list[BigOClaim]:
    """The named identity claims with their pinned constants and thresholds.

    ``cheb`` supplies Lambda for the Mertens claim; tables are built at
    ``limit`` when omitted.
    """
    if cheb is None:
        cheb = tables.build_tables(limit)
    if cheb.limit < limit:
        raise ValueError(f"tables limit {cheb.limit} below catalog limit {limit}")

    n = np.arange(limit + 1, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        harmonic = _prefix(1.0 / n)
        log_sum = _prefix(np.log(n))
        log_over_n = _prefix(np.log(n) / n)
        mertens = _prefix(cheb.lam[: limit + 1] / n)

    ln = np.log
    one = np.ones_like
    return [
        BigOClaim(
            "ln1p_recip",
            lhs=lambda x: np.log1p(1.0 / x),
            rhs_main=lambda x: 1.0 / x,
            rhs_bound=lambda x: 1.0 / (x * x),
            constant=1.0,
            threshold=2,
            domain="integers",
        ),
        BigOClaim(
            "harmonic_log",
            lhs=_prefix_lookup(harmonic, limit),
            rhs_main=ln,
            rhs_bound=one,
            constant=1.0,
            threshold=1,
        ),
        BigOClaim(
            "stirling_log_sum",
            lhs=_prefix_lookup(log_sum, limit),
            rhs_main=lambda x: x * ln(x) - x,
            rhs_bound=ln,
            constant=3.0,
            threshold=2,
        ),
        BigOClaim(
            "log_over_n",
            lhs=_prefix_lookup(log_over_n, limit),
            rhs_main=lambda x: ln(x) ** 2 / 2,
            rhs_bound=one,
            constant=1.0,
            threshold=1,
        ),
        BigOClaim(
            "mertens",
            lhs=_prefix_lookup(mertens, limit),
            rhs_main=ln,
            rhs_bound=one,
            constant=1.5,
            threshold=1,
        ),
        BigOClaim(
            "euler_gamma",
            lhs=_prefix_lookup(harmonic, limit),
            rhs_main=lambda x: ln(x) + EULER_GAMMA,
            rhs_bound=lambda x: 1.0 / x,
            constant=1.0,
            threshold=1,
        ),
    ]


@dataclass(frozen=True)
class InequalityCheck:
    """Result of a pointwise inequality scan: smallest observed slack."""

    name: str
    min_slack: float
    witness_x: float

    @property
    def passed(self) -> bool:
        return self.min_slack >= 0


def _min_slack(name: str, x: np.ndarray, slack: np.ndarray) -> InequalityCheck:
    i = int(np.argmin(slack))
    return InequalityCheck(name, float(slack[i]), float(x[i]))


def elementary_inequalities(basel_limit: int = 10**6) -> list[InequalityCheck]:
    """The elementary workaround inequalities, scanned on dense grids."""
    out = []

    x = np.arange(0, 10_000 + 1) * 1e-3  # [0, 10], step 1e-3
    out.append(_min_slack("exp_lower", x, np.exp(x) - (1 + x)))

    x = np.arange(0, 500 + 1) * 1e-3  # [0, 1/2]
    out.append(_min_slack("exp_upper", x, (1 + x + x * x) - np.exp(x)))
    slack = np.minimum(np.log1p(x) - (x - x * x), x - np.log1p(x))
    out.append(_min_slack("log_two_sided", x, slack))

    m = np.arange(1, basel_limit + 1, dtype=np.float64)
    partial = np.cumsum((1.0 / (m * m)).astype(np.longdouble)).astype(np.float64)
    out.append(_min_slack("basel_partial_sums", m, 2.0 - partial))

    x = np.arange(1, 10_000 + 1) * 1e-3  # (0, 10]
    slacks = []
    for a in (0.25, 0.5, 1.0, 2.0):
        xa = x**a
        slacks.append(2.0 / (a * x ** (a / 2)) - np.log(x) / xa)
    out.append(_min_slack("log_power_decay", np.tile(x, 4), np.concatenate(slacks)))

    return out


def euler_gamma_estimate(N: int) -> float:
    """H(N) - ln N, converging to Euler's constant from above at rate O(1/N)."""
    if N < 10:
        raise ValueError(f"N must be >= 10, got {N}")
    h = np.sum(1.0 / np.arange(1, N + 1, dtype=np.longdouble))
    return float(h - np.log(np.longdouble(N)))


def natfloor(x: float) -> int:
    """Floor clamped at zero, matching a natural-number codomain."""
    return max(math.floor(x), 0)


def floor_galois_check(n: int, x: float) -> bool:
    """Does (n <= natfloor(x)) <=> (n <= x) hold for this pair?

    The equivalence is the floor adjunction; it holds whenever n >= 0 and
    x >= 0 (natfloor clamping breaks it for negative x).
    """
    return (n <= natfloor(x)) == (n <= x)


def natfloor_shift_check(z: float) -> bool:
    """Check natfloor(|z - 1|) + 1 == natfloor(z), valid for z >= 1."""
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    return natfloor(abs(z - 1)) + 1 == natfloor(z)
