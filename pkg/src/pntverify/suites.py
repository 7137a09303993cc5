"""Named verification suites shared by the CLI and the test harness.

Every suite returns a flat list of CheckResult rows. All randomness is
drawn from Python's ``random.Random`` (Mersenne Twister) seeded once per
suite, so identical (suite, max_n, seed) inputs reproduce byte-identical
results.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import arith, asymptotics, identities, selberg, tables

SUITE_NAMES = (
    "moebius",
    "combinatorics",
    "chebyshev",
    "inequalities",
    "asymptotics",
    "selberg",
    "iteration",
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    status: str  # "pass" | "fail"
    witness_x: float
    value: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _result(suite, check, ok, witness=0.0, value=0.0) -> CheckResult:
    return CheckResult(suite, check, "pass" if ok else "fail", float(witness), float(value))


def run_moebius(max_n: int = 10**5, seed: int = 0) -> list[CheckResult]:
    out = []

    s = identities.moebius_divisor_sums(max_n)
    bad = np.flatnonzero(s[2:] != 0)
    ok = s[1] == 1 and len(bad) == 0
    witness = float(bad[0] + 2) if len(bad) else 1.0
    out.append(_result("moebius", "divisor_sum_indicator", ok, witness, float(s[1])))

    # inversion round-trip: f(m) = sum_{d|m} g(d) recovers g exactly
    rng = random.Random(seed)
    limit = 1000
    mu = tables.moebius_sieve(limit)
    divs = [arith.divisors(n) for n in range(1, limit + 1)]
    ok, witness = True, 0.0
    for _ in range(100):
        g = [0] + [rng.randint(-9, 9) for _ in range(limit)]
        f = [0] * (limit + 1)
        for d in range(1, limit + 1):
            for m in range(d, limit + 1, d):
                f[m] += g[d]
        for n in range(1, limit + 1):
            got = sum(int(mu[d]) * f[n // d] for d in divs[n - 1])
            if got != g[n]:
                ok, witness = False, n
                break
        if not ok:
            break
    out.append(_result("moebius", "inversion_roundtrip", ok, witness, 100))
    return out


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 9))


def _random_bilinear(rng: random.Random):
    a, b, c, e = (rng.randint(-5, 5) for _ in range(4))

    def f(d, dp):
        return a * d * dp + b * d + c * dp + e

    return f


def run_combinatorics(seed: int = 0) -> list[CheckResult]:
    out = []
    rng = random.Random(seed)

    # reflection d -> n/d, exact rationals, all n <= 1e4
    limit = 10**4
    table = identities.TabulatedFunction(
        limit, tuple(_random_rational(rng) for _ in range(limit))
    )
    ok, witness = True, 0.0
    for n in range(1, limit + 1):
        if identities.divisor_sum(n, table) != identities.divisor_sum_reflected(n, table):
            ok, witness = False, n
            break
    out.append(_result("combinatorics", "reflection", ok, witness, limit))

    # pair-enumeration and divisor-pair identities: every n <= 500 with
    # f == 1, plus 100 random (bilinear f, n) pairs
    for name, lhs_fn, rhs_fn in (
        ("triangle_sum", identities.triangle_sum_lhs, identities.triangle_sum_rhs),
        ("divisor_pair_sum", identities.divisor_pair_sum_lhs, identities.divisor_pair_sum_rhs),
    ):
        ok, witness = True, 0.0
        for n in range(1, 501):
            if lhs_fn(n, lambda d, dp: 1) != rhs_fn(n, lambda d, dp: 1):
                ok, witness = False, n
                break
        if ok:
            for _ in range(100):
                f = _random_bilinear(rng)
                n = rng.randint(1, 500)
                if lhs_fn(n, f) != rhs_fn(n, f):
                    ok, witness = False, n
                    break
        out.append(_result("combinatorics", name, ok, witness, 500))

    # partial summation, 200 random rational (f, G, a, b) with b <= 100
    ok, witness = True, 0.0
    for _ in range(200):
        b = rng.randint(1, 100)
        a = rng.randint(0, b)
        fv = [None] + [_random_rational(rng) for _ in range(b + 2)]
        gv = [None] + [_random_rational(rng) for _ in range(b + 2)]
        f, G = (lambda i, v=fv: v[i]), (lambda i, v=gv: v[i])
        if identities.partial_summation_lhs(f, G, a, b) != identities.partial_summation_rhs(
            f, G, a, b
        ):
            ok, witness = False, b
            break
    out.append(_result("combinatorics", "partial_summation", ok, witness, 200))
    return out


def run_chebyshev(t: tables.ChebyshevTables) -> list[CheckResult]:
    out = []
    B = tables.chebyshev_B()
    out.append(_result("chebyshev", "constant_B", 0.92 < B < 0.9213, 0, B))
    out.append(_result("chebyshev", "constant_6B5", 6 * B / 5 < 1.11, 0, 6 * B / 5))

    n_max = min(t.limit, 10**4)
    lam_ok = all(
        abs(float(t.lam[n]) - arith.mangoldt(n)) <= 1e-12 for n in range(1, n_max + 1)
    )
    out.append(_result("chebyshev", "mangoldt_agreement", lam_ok, 0, n_max))

    gap = t.psi_prefix[1:] - t.theta_prefix[1:]
    out.append(_result("chebyshev", "psi_dominates_theta", bool((gap >= 0).all()), 0, float(gap.min())))

    if t.limit >= 10**5:
        scan = tables.chebyshev_window_scan(t)
        ok = B < scan.min_ratio and scan.max_ratio < 6 * B / 5
        out.append(_result("chebyshev", "window_scan", ok, scan.x0, scan.min_ratio))
    return out


def run_inequalities() -> list[CheckResult]:
    return [
        _result("inequalities", c.name, c.passed, c.witness_x, c.min_slack)
        for c in asymptotics.elementary_inequalities()
    ]


def run_asymptotics(t: tables.ChebyshevTables, seed: int = 0) -> list[CheckResult]:
    out = []
    limit = t.limit
    for claim in asymptotics.identity_catalog(limit, t):
        grid = asymptotics.SampleGrid(int(claim.threshold), limit, include_midpoints=True)
        rep = asymptotics.check_claim(claim, grid)
        out.append(_result("asymptotics", f"catalog_{claim.name}", rep.passed, rep.witness_x, rep.sup_ratio))

    if limit >= 10:
        est = asymptotics.euler_gamma_estimate(limit)
        err = abs(est - asymptotics.EULER_GAMMA)
        out.append(_result("asymptotics", "euler_gamma_estimate", err < 10 / limit, limit, est))

    galois_ok = all(
        asymptotics.floor_galois_check(n, x / 10)
        for n in range(0, 101)
        for x in range(0, 101)
    )
    out.append(_result("asymptotics", "floor_galois", galois_ok, 0, 101 * 101))

    rng = random.Random(seed)
    zs = [rng.uniform(1, 10**6) for _ in range(1000)]
    shift_ok = all(asymptotics.natfloor_shift_check(z) for z in zs)
    out.append(_result("asymptotics", "natfloor_shift", shift_ok, 0, len(zs)))
    return out


def selberg_bruteforce_prefix(hi: int) -> list[float]:
    """Independent oracle for the symmetry sum: per-n double sum over divisors.

    Uses trial-division mangoldt/divisors only (no sieve) with an
    extended-precision accumulator; entry x holds S(x).
    """
    running = np.longdouble(0)
    prefix = [0.0]
    for n in range(1, hi + 1):
        running += arith.mangoldt(n) * math.log(n)
        running += math.fsum(
            arith.mangoldt(d) * arith.mangoldt(n // d) for d in arith.divisors(n)
        )
        prefix.append(float(running))
    return prefix


def run_selberg(t: tables.ChebyshevTables, seed: int = 0) -> list[CheckResult]:
    out = []

    # agreement with the brute-force double sum
    hi = min(t.limit, 1000)
    prefix = selberg.symmetry_prefix(t, hi)
    oracle = selberg_bruteforce_prefix(hi)
    errs = [abs(float(prefix[x]) - oracle[x]) for x in range(1, hi + 1)]
    worst = max(errs)
    ok = worst <= 1e-9
    witness = 0.0 if ok else errs.index(worst) + 1
    out.append(_result("selberg", "bruteforce_agreement", ok, witness, worst))

    grid = asymptotics.SampleGrid(2, min(t.limit, 10**5))
    rep = selberg.selberg_check(t, grid)
    out.append(_result("selberg", "symmetry_sup", rep.passed and rep.sup_ratio <= 5, rep.witness_x, rep.sup_ratio))

    rng = random.Random(seed)
    hi = min(t.limit, 10**4)
    xs = sorted(rng.randint(2, hi) for _ in range(200))
    rep = selberg.r_inequality_check(t, xs)
    out.append(_result("selberg", "error_inequality", rep.passed, rep.witness_x, rep.sup_ratio))
    return out


def run_iteration() -> list[CheckResult]:
    out = []
    a1, k, steps = 0.5, 0.1, 2000
    trace = selberg.iterate_bound(a1, k, steps)
    vals = trace.values
    decreasing = all(b < a for a, b in zip(vals, vals[1:]))
    positive = all(v > 0 for v in vals)
    bound_ok = all(
        v <= 1 / math.sqrt(1 / a1**2 + 2 * k * i) for i, v in enumerate(vals)
    )
    out.append(_result("iteration", "strictly_decreasing", decreasing, 0, len(vals)))
    out.append(_result("iteration", "strictly_positive", positive, 0, min(vals)))
    out.append(_result("iteration", "algebraic_bound", bound_ok, 0, vals[-1]))
    out.append(_result("iteration", "final_term_small", vals[-1] < 0.05, steps, vals[-1]))
    return out


def run_suite(name: str, max_n: int = 10**6, seed: int = 0) -> list[CheckResult]:
    """Run one named suite (or 'all'); builds Chebyshev tables as needed."""
    names = SUITE_NAMES if name == "all" else (name,)
    if any(n not in SUITE_NAMES for n in names):
        raise ValueError(f"unknown suite {name!r}; valid: {', '.join(SUITE_NAMES + ('all',))}")

    t = None
    if {"chebyshev", "asymptotics", "selberg"} & set(names):
        t = tables.build_tables(max_n)

    out: list[CheckResult] = []
    for n in names:
        if n == "moebius":
            out += run_moebius(min(max_n, 10**5), seed)
        elif n == "combinatorics":
            out += run_combinatorics(seed)
        elif n == "chebyshev":
            out += run_chebyshev(t)
        elif n == "inequalities":
            out += run_inequalities()
        elif n == "asymptotics":
            out += run_asymptotics(t, seed)
        elif n == "selberg":
            out += run_selberg(t, seed)
        elif n == "iteration":
            out += run_iteration()
    return out
