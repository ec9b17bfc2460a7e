"""Reproduction criteria, one test each, at their stated tolerances.

Every test records a PASS/FAIL line that is echoed in the pytest summary
under "acceptance criteria".
"""

import math
import time
import warnings

import numpy as np
import pytest

from dpbound.coverage import run_coverage
from dpbound.detector import improvement_factor, signal_coefficient
from dpbound.emission import MCConfig, gaussian_dipole_exact, gaussian_dipole_integral, heating_rate
from dpbound.errors import RegimeViolation
from dpbound.inference import CountData, PriorSpec, lambda_quantile, r0_lower_bound
from dpbound.selfenergy import (
    CrystalSpec,
    MassSphere,
    QuadratureConfig,
    delta_e_crystal,
    delta_e_numeric,
    delta_e_saturated,
    delta_e_small_d,
    offdiag_sum_chain,
    offdiag_sum_exact,
)
from dpbound.special import reg_lower_gamma

SEED = 20200907
CRYSTAL = CrystalSpec(n_atoms=1e14, nucleus_mass=5e-26, lattice_constant=1e-10, r0=1e-14)


def timed(fn, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn()
    return out, (time.perf_counter() - t0) / repeat


def rel(x, ref):
    return abs(x / ref - 1.0)


def test_01_crystal_collapse_time(record_criterion):
    res, dt = timed(lambda: delta_e_crystal(CRYSTAL, 1e-13), repeat=100)
    ok = rel(res.delta_e, 4.61e-32) < 0.01 and rel(res.tau, 0.0023) < 0.01 and dt < 1e-3
    record_criterion(
        1,
        "crystal collapse time",
        ok,
        f"dE={res.delta_e:.4e} J (4.61e-32), tau={res.tau:.4e} s (0.0023), {dt * 1e6:.1f} us",
    )
    assert ok


def test_02_second_operating_point(record_criterion):
    with pytest.warns(RegimeViolation):
        res = delta_e_crystal(CRYSTAL, 1e-14)
    ok = rel(res.tau, 0.013) < 0.05 and res.regime_violation
    record_criterion(
        2,
        "second operating point",
        ok,
        f"tau={res.tau:.4e} s (0.013 +-5%), rel={rel(res.tau, 0.013):.3f}, regime_violation={res.regime_violation}",
    )
    assert ok


def test_03_headline_bound(record_criterion):
    args = (1.756e-29, CountData(z_c=576, z_b=506), PriorSpec(r0_min=1e-14, credibility=0.95))
    res, dt = timed(lambda: r0_lower_bound(*args, rounded=True), repeat=20)
    ok = res.lambda_bar_rounded == 617 and rel(res.r0_bound, 0.54e-10) < 0.01 and dt < 0.01
    record_criterion(
        3,
        "headline bound",
        ok,
        f"Lambda_bar={res.lambda_bar:.4f} -> {res.lambda_bar_rounded}, R0 > {res.r0_bound:.4e} m (0.54e-10), "
        f"{dt * 1e3:.2f} ms",
    )
    assert ok


def test_04_improvement_factor(record_criterion):
    value = improvement_factor(1.756e-29, 5.712e-29)
    ok = abs(value - 1.620) <= 0.001
    record_criterion(4, "improvement factor", ok, f"I={value:.5f} (1.620 +- 0.001)")
    assert ok


def test_05_gaussian_dipole_integral(record_criterion):
    parts = []
    ok = True
    for r0 in (1.0, 1e-10):
        est, dt = timed(lambda: gaussian_dipole_integral(r0, MCConfig(samples=10_000_000, seed=SEED)))
        exact = gaussian_dipole_exact(r0)
        sig = abs(est.value - exact) / est.error
        r = rel(est.value, exact)
        ok &= sig <= 3.0 and r <= 0.01 and dt < 30.0
        parts.append(f"r0={r0:g}: {sig:.2f} sigma, rel {r:.2e}, {dt:.1f} s")
    record_criterion(5, "gaussian dipole integral", ok, "; ".join(parts))
    assert ok


def test_06_selfenergy_oracle(record_criterion):
    sphere = MassSphere(5e-26, 1e-14)
    parts = []
    ok = True
    for f in (0.01, 2.0, 5.0, 10.0):
        d = f * sphere.r0
        analytic = delta_e_small_d(sphere, d) if f < 1 else delta_e_saturated(sphere, d)
        est = delta_e_numeric(sphere, d, QuadratureConfig(seed=SEED))
        r = rel(est.value, analytic)
        ok &= r < 0.02
        parts.append(f"d/R0={f:g}: {r:.2e}")
    record_criterion(6, "self-energy numeric vs analytic (<2%)", ok, ", ".join(parts))
    assert ok


def test_07_special_functions(record_criterion):
    xs = np.linspace(0.0, 50.0, 2001)
    p1 = max(abs(reg_lower_gamma(1.0, x) - (-math.expm1(-x))) for x in xs)
    rec = 0.0
    for s in (0.5, 1.0, 2.5, 10.0, 57.0, 577.0, 1500.0, 9000.0):
        for x in (0.1, 1.0, 5.0, 30.0, 300.0, 600.0, 1400.0, 9100.0):
            lhs = reg_lower_gamma(s + 1.0, x)
            rhs = reg_lower_gamma(s, x) - math.exp(s * math.log(x) - x - math.lgamma(s + 1.0))
            rec = max(rec, abs(lhs - rhs))
    q0 = abs(lambda_quantile(0, math.inf, 0.95) - math.log(20.0))
    ok = p1 <= 1e-12 and rec <= 1e-10 and q0 <= 1e-9
    record_criterion(
        7, "special functions", ok, f"P(1,x) err {p1:.1e}, recurrence err {rec:.1e}, ln20 quantile err {q0:.1e}"
    )
    assert ok


def test_08_lattice_sum_bound(record_criterion):
    margins = []
    for n in range(2, 13):
        margins.append(offdiag_sum_chain(n) - offdiag_sum_exact(n))
    res = delta_e_crystal(CRYSTAL, 1e-13)
    ratio = res.offdiag_bound / res.delta_e
    ok = min(margins) > 0 and ratio < 1e-6
    record_criterion(
        8,
        "lattice-sum bound",
        ok,
        f"exact < chain for n=2..12 (min margin {min(margins):.3g}), offdiag/diag={ratio:.2e} (<1e-6)",
    )
    assert ok


def test_09_simulator_coverage(record_criterion, synthetic_setup):
    comps, acq = synthetic_setup
    a = signal_coefficient(comps, acq)
    r0_true = (a / 60.0) ** (1.0 / 3.0)
    res, dt = timed(lambda: run_coverage(comps, acq, r0_true, 506.0, replicas=500, seed=SEED))
    ok = res.fraction >= 0.93 and dt < 60.0
    record_criterion(
        9,
        "simulator coverage",
        ok,
        f"{res.covered}/{res.replicas} = {res.fraction:.3f} (>=0.93; analytic {res.expected_coverage:.3f}), "
        f"{res.undefined} undefined, {dt:.1f} s",
    )
    assert ok


def test_10_heating_rate(record_criterion):
    h = heating_rate(1e-15)
    scaling = heating_rate(2e-15) * 8.0 / h
    ok = 1e-5 <= h <= 1e-2 and abs(scaling - 1.0) < 1e-12
    record_criterion(
        10,
        "heating rate",
        ok,
        f"{h:.4e} K/s at R0=1e-15 m (band 1e-5..1e-2), constant {h * 1e-45:.4e} K m^3/s, "
        f"R0^-3 scaling err {abs(scaling - 1):.1e}",
    )
    assert ok
