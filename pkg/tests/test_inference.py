import math
import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from dpbound.errors import BoundUndefined
from dpbound.inference import (
    PUBLISHED_COMPTON_COEFFICIENT,
    PUBLISHED_SIGNAL_COEFFICIENT,
    POISSON_OFFSET,
    CountData,
    PriorSpec,
    expected_from_count,
    lambda_max_for,
    lambda_quantile,
    posterior_cdf,
    posterior_pdf,
    r0_lower_bound,
)

A = PUBLISHED_SIGNAL_COEFFICIENT


def test_poisson_offset_pinned():
    # Lambda = z + 1 per source, so Lambda_c = z_b + z_s + 2
    assert POISSON_OFFSET == 1
    assert expected_from_count(506) == 507
    assert lambda_max_for(A, 506, 1e-14) == pytest.approx(1.756e13 + 508, rel=1e-15)


def test_headline_rounded():
    res = r0_lower_bound(A, rounded=True)
    assert res.lambda_bar_rounded == 617
    assert res.lambda_b == 507
    assert res.r0_bound == pytest.approx((A / 109) ** (1 / 3), rel=1e-14)
    assert res.r0_bound == pytest.approx(0.54e-10, rel=0.01)


def test_headline_continuous():
    res = r0_lower_bound(A)
    assert res.lambda_bar == pytest.approx(617.071, abs=1e-3)
    assert res.r0_bound == pytest.approx(0.54e-10, rel=0.01)
    assert not res.rounded


def test_quantile_matches_scipy_inverse():
    # far below the cap the truncation is invisible
    for z in (0, 1, 10, 100, 576):
        assert lambda_quantile(z, 1e13, 0.95) == pytest.approx(special.gammaincinv(z + 1, 0.95), rel=1e-9)


def test_zero_count_quantile():
    assert abs(lambda_quantile(0, math.inf, 0.95) - math.log(20)) <= 1e-9


def test_zero_count_truncated_exponential():
    lam_max = 2.0
    q = lambda_quantile(0, lam_max, 0.5)
    # 1 - e^-q = 0.5 (1 - e^-2)
    assert q == pytest.approx(-math.log(1 - 0.5 * (1 - math.exp(-2))), rel=1e-9)


@pytest.mark.parametrize("z", [10, 100, 576, 5000])
def test_median_near_z_plus_two_thirds(z):
    assert abs(lambda_quantile(z, math.inf, 0.5) - (z + 2 / 3)) < 1


def test_monotone_grid():
    creds = (0.5, 0.9, 0.95, 0.99)
    zs = (0, 1, 10, 100, 576)
    for c in creds:
        qs = [lambda_quantile(z, 1e6, c) for z in zs]
        assert qs == sorted(qs)
    for z in zs:
        qs = [lambda_quantile(z, 1e6, c) for c in creds]
        assert qs == sorted(qs)


def test_cdf_at_quantile_is_credibility():
    q = lambda_quantile(576, 1000.0, 0.95)
    assert posterior_cdf(q, 576, 1000.0) == pytest.approx(0.95, abs=1e-9)


@pytest.mark.parametrize("z, lam_max", [(0, 3.0), (5, 4.0), (576, 700.0), (576, 1e4)])
def test_posterior_normalized(z, lam_max):
    pts = [z] if 0 < z < lam_max else None
    val, _ = integrate.quad(lambda x: posterior_pdf(x, z, lam_max), 0, lam_max, points=pts, epsabs=1e-12, limit=200)
    assert val == pytest.approx(1.0, abs=1e-8)


def test_posterior_mode_and_support():
    assert posterior_pdf(576, 576, 1e4) > posterior_pdf(575.5, 576, 1e4)
    assert posterior_pdf(576, 576, 1e4) > posterior_pdf(576.5, 576, 1e4)
    assert posterior_pdf(701, 576, 700.0) == 0.0
    assert posterior_pdf(0.5, 0, 3.0) == pytest.approx(math.exp(-0.5) / (1 - math.exp(-3)))


def test_truncation_robust():
    base = lambda_max_for(A, 506, 1e-14)
    assert abs(lambda_quantile(576, 10 * base, 0.95) - lambda_quantile(576, base, 0.95)) < 1e-6


def test_improvement_preset_scales_bound():
    r = r0_lower_bound(A, rounded=True).r0_bound
    r2 = r0_lower_bound(A + PUBLISHED_COMPTON_COEFFICIENT, rounded=True).r0_bound
    assert r2 / r == pytest.approx(((A + PUBLISHED_COMPTON_COEFFICIENT) / A) ** (1 / 3), rel=1e-6)
    assert r2 / r == pytest.approx(1.620, abs=1e-3)


@settings(max_examples=40, deadline=None)
@given(st.floats(1e-32, 1e-26), st.floats(1.01, 10.0))
def test_bound_scales_as_cube_root(a, k):
    # at these a the cap lies far in the tail, so counts fix the denominator
    r1 = r0_lower_bound(a).r0_bound
    r2 = r0_lower_bound(a * k).r0_bound
    assert r2 > r1
    assert r2 / r1 == pytest.approx(k ** (1 / 3), rel=1e-6)


def test_zero_signal_gives_zero_with_warning():
    with pytest.warns(UserWarning):
        res = r0_lower_bound(0.0)
    assert res.r0_bound == 0.0


def test_undefined_when_counts_below_background():
    with pytest.raises(BoundUndefined):
        r0_lower_bound(A, CountData(z_c=400, z_b=506))
    # a single count at median credibility is also swallowed by the +2 offsets
    with pytest.raises(BoundUndefined):
        r0_lower_bound(1.0, CountData(z_c=0, z_b=0), PriorSpec(credibility=0.5))


def test_input_validation():
    with pytest.raises(ValueError):
        CountData(z_c=-1)
    with pytest.raises(ValueError):
        PriorSpec(r0_min=0.0)
    with pytest.raises(ValueError):
        PriorSpec(credibility=1.0)
    with pytest.raises(ValueError):
        r0_lower_bound(-1.0)
    with pytest.raises(ValueError):
        lambda_quantile(1, 10.0, 0.0)
