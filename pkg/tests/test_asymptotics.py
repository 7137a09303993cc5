import math
import random

import numpy as np
import pytest

from pntverify import asymptotics as asym
from pntverify.asymptotics import BigOClaim, SampleGrid


def test_sample_grid_points():
    g = SampleGrid(1, 3, include_midpoints=True)
    assert list(g.points()) == [1.0, 1.5, 2.0, 2.5, 3.0]
    assert list(SampleGrid(2, 4).points()) == [2.0, 3.0, 4.0]
    with pytest.raises(ValueError):
        SampleGrid(0, 5)
    with pytest.raises(ValueError):
        SampleGrid(5, 4)


def _claim(lhs, main, bound, C, x0, domain="integers"):
    return BigOClaim("test", lhs, main, bound, C, x0, domain)


def test_check_claim_zero_bound_fails():
    # bound (x-1)^2 vanishes at x = 1 while lhs != main there
    c = _claim(lambda x: x + 1, lambda x: np.zeros_like(x), lambda x: (x - 1) ** 2, 10.0, 1)
    rep = asym.check_claim(c, SampleGrid(1, 50))
    assert rep.verdict == "fail"
    assert rep.witness_x == 1.0


def test_check_claim_shifted_bound_passes():
    # x + 1 <= 1 * (x^2 + 1), sup ratio 1 attained at x = 1
    c = _claim(lambda x: x + 1, lambda x: np.zeros_like(x), lambda x: x * x + 1, 1.0, 1)
    rep = asym.check_claim(c, SampleGrid(1, 100))
    assert rep.verdict == "pass"
    assert rep.sup_ratio == pytest.approx(1.0, abs=1e-15)
    assert rep.witness_x == 1.0  # first argmax


def test_check_claim_identity_trivial():
    f = lambda x: np.sqrt(x)
    c = _claim(f, lambda x: np.zeros_like(x), f, 1.0, 1)
    rep = asym.check_claim(c, SampleGrid(1, 100))
    assert rep.verdict == "pass"
    assert rep.sup_ratio == 1.0


def test_check_claim_nonfinite_fails_with_witness():
    def lhs(x):
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log(x - 2)

    c = _claim(lhs, lambda x: np.zeros_like(x), lambda x: x, 1.0, 1)
    rep = asym.check_claim(c, SampleGrid(1, 10))
    assert rep.verdict == "fail"
    assert rep.witness_x == 1.0


def test_check_claim_empty_grid_rejected():
    c = _claim(lambda x: x, lambda x: x, lambda x: x, 1.0, 100)
    with pytest.raises(ValueError):
        asym.check_claim(c, SampleGrid(1, 10))


def test_estimate_constant_examples():
    h = np.cumsum(np.concatenate([[0.0], 1.0 / np.arange(1, 101)]))
    with np.errstate(divide="ignore"):
        f = lambda x: h[x.astype(np.int64)] - np.log(x)
    C, wx = asym.estimate_constant(f, lambda x: np.ones_like(x), SampleGrid(1, 100))
    assert C == pytest.approx(1.0, abs=1e-15)
    assert wx == 1.0

    # n^2 |ln(1+1/n) - 1/n| = 1/2 - 1/(3n) + ... increases with n, so the
    # max over [2, 100] sits at the right endpoint
    f2 = lambda x: np.log1p(1.0 / x) - 1.0 / x
    g2 = lambda x: 1.0 / (x * x)
    C, wx = asym.estimate_constant(f2, g2, SampleGrid(2, 100))
    assert C == pytest.approx(abs(math.log1p(1 / 100) - 0.01) * 100**2, abs=1e-12)
    assert wx == 100.0
    assert abs(math.log(1.5) - 0.5) * 4 == pytest.approx(0.3781, abs=1e-4)  # n = 2 value

    C, _ = asym.estimate_constant(lambda x: x, lambda x: x, SampleGrid(1, 10))
    assert C == 1.0


def test_estimate_constant_rejects_vanishing_bound():
    with pytest.raises(ValueError):
        asym.estimate_constant(lambda x: x, lambda x: x - 1, SampleGrid(1, 10))


def test_strict_reading_soundness(tables_1m):
    # pass => empirical constant over the same grid stays below claim.C
    for claim in asym.identity_catalog(10**4, tables_1m):
        grid = SampleGrid(int(claim.threshold), 10**4, include_midpoints=claim.domain == "reals")
        rep = asym.check_claim(claim, grid)
        assert rep.passed, claim.name
        pts = grid.points()
        if claim.domain == "integers":
            pts = pts[pts == np.floor(pts)]
        assert rep.sup_ratio <= claim.constant


def test_catalog_small_scale_spot_values(tables_1m):
    catalog = {c.name: c for c in asym.identity_catalog(10**3, tables_1m)}
    rep = asym.check_claim(catalog["ln1p_recip"], SampleGrid(2, 10**3))
    assert rep.passed
    rep = asym.check_claim(catalog["harmonic_log"], SampleGrid(1, 10**3, True))
    assert rep.passed
    assert rep.sup_ratio == pytest.approx(1.0, abs=1e-15)  # H(1) - ln 1


def test_catalog_rejects_grid_beyond_limit(tables_1m):
    catalog = asym.identity_catalog(100, tables_1m)
    harmonic = next(c for c in catalog if c.name == "harmonic_log")
    with pytest.raises(ValueError):
        asym.check_claim(harmonic, SampleGrid(1, 200))


def test_elementary_inequalities_pass():
    checks = {c.name: c for c in asym.elementary_inequalities()}
    assert set(checks) == {
        "exp_lower", "exp_upper", "log_two_sided", "basel_partial_sums", "log_power_decay",
    }
    for c in checks.values():
        assert c.passed, c
    # boundary: equality of the ln bounds at x = 0
    assert checks["log_two_sided"].min_slack == pytest.approx(0.0, abs=1e-15)
    # endpoint x = 1/2: ln(1.5) inside [1/4, 1/2]
    assert 0.25 <= math.log(1.5) <= 0.5
    # Basel sum stays comfortably below 2
    assert checks["basel_partial_sums"].min_slack == pytest.approx(2 - math.pi**2 / 6, abs=1e-5)


def test_euler_gamma_estimate():
    assert asym.euler_gamma_estimate(10) == pytest.approx(0.626383, abs=1e-6)
    assert abs(asym.euler_gamma_estimate(10**6) - asym.EULER_GAMMA) < 1e-6
    for N in (10, 100, 1000):
        assert asym.euler_gamma_estimate(2 * N) < asym.euler_gamma_estimate(N)
    with pytest.raises(ValueError):
        asym.euler_gamma_estimate(9)


def test_natfloor():
    assert asym.natfloor(3.7) == 3
    assert asym.natfloor(-2.3) == 0
    assert asym.natfloor(5.0) == 5


def test_floor_galois_correspondence():
    for n in range(0, 101):
        for k in range(0, 101):
            assert asym.floor_galois_check(n, k / 10)


def test_natfloor_shift():
    assert asym.natfloor(abs(3.5 - 1)) + 1 == asym.natfloor(3.5)
    rng = random.Random(0)
    for _ in range(1000):
        assert asym.natfloor_shift_check(rng.uniform(1, 10**6))
    with pytest.raises(ValueError):
        asym.natfloor_shift_check(0.5)


def test_harmonic_telescoping_mechanism():
    # ln x equals the telescoping sum of ln(1 + 1/n) for integer x
    for x in (2, 10, 100, 1000, 10**4):
        s = math.fsum(math.log1p(1.0 / n) for n in range(1, x))
        assert abs(math.log(x) - s) <= 1e-9
