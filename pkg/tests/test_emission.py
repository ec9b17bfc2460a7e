import math
import warnings

import numpy as np
import pytest
from scipy import constants as sc
from scipy import integrate

from dpbound import constants as const
from dpbound.emission import (
    EmitterSpec,
    MCConfig,
    SpectralRate,
    beta_constant,
    debye_waller_r0,
    gaussian_dipole_exact,
    gaussian_dipole_integral,
    heating_rate,
    rate_per_energy,
    rate_per_omega,
)
from dpbound.errors import BudgetExceeded, OutOfValidityBand


def test_beta_from_constants():
    # scipy ships a newer CODATA release; agreement at 1e-8 is what both share
    ref = 2.0 / 3.0 * sc.G * sc.e**2 / (math.pi**1.5 * sc.epsilon_0 * sc.c**3)
    assert beta_constant() == pytest.approx(ref, rel=1e-8)
    assert const.E_CHARGE == pytest.approx(sc.e, rel=1e-9)
    assert const.HBAR == pytest.approx(sc.hbar, rel=1e-8)
    assert beta_constant() == pytest.approx(8.598e-64, rel=1e-3)


def test_rate_scaling():
    omega = 2000 * const.KEV / const.HBAR
    base = rate_per_omega(EmitterSpec(10, 1e20, 1e-10), omega).value
    assert rate_per_omega(EmitterSpec(20, 1e20, 1e-10), omega).value == pytest.approx(4 * base)
    assert rate_per_omega(EmitterSpec(10, 2e20, 1e-10), omega).value == pytest.approx(2 * base)
    assert rate_per_omega(EmitterSpec(10, 1e20, 2e-10), omega).value == pytest.approx(base / 8)
    assert rate_per_omega(EmitterSpec(10, 1e20, 1e-10), 2 * omega).value == pytest.approx(base / 2)


def test_per_energy_is_per_omega_over_hbar():
    em = EmitterSpec(32, 1e24, 1e-10)
    e = 1500 * const.KEV
    r_e = rate_per_energy(em, e)
    r_w = rate_per_omega(em, e / const.HBAR)
    assert r_e.per == "energy"
    assert r_e.value == pytest.approx(r_w.value / const.HBAR)
    assert r_e.per_omega().value == pytest.approx(r_w.value)
    assert r_w.per_energy().per_energy() == r_w.per_energy()


def test_integrated_counts_are_log_ratio():
    em = EmitterSpec(32, 1e24, 1e-10)
    val, _ = integrate.quad(lambda ek: rate_per_energy(em, ek * const.KEV).value * const.KEV, 1000, 3800)
    assert val == pytest.approx(const.BETA * 32**2 * 1e24 / 1e-30 * math.log(3.8), rel=1e-9)


def test_validity_band_warning():
    em = EmitterSpec(1, 1, 1e-10)
    with pytest.warns(OutOfValidityBand):
        rate_per_energy(em, 1 * const.KEV)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        rate_per_energy(em, 100 * const.KEV)


def test_electron_term_negligible():
    with_e = rate_per_omega(EmitterSpec(32, 1, 1e-10, r0_electron=1e-10), 1e21).value
    without = rate_per_omega(EmitterSpec(32, 1, 1e-10), 1e21).value
    assert with_e == pytest.approx(without * (1 + 1 / 32))
    with pytest.raises(ValueError):
        EmitterSpec(32, 1, 1e-10, r0_electron=1e-12)


def test_emitter_validation():
    for bad in [(0, 1, 1e-10), (1, 0, 1e-10), (1, 1, 0.0)]:
        with pytest.raises(ValueError):
            EmitterSpec(*bad)
    with pytest.raises(ValueError):
        rate_per_omega(EmitterSpec(1, 1, 1e-10), 0.0)


def test_heating_rate_value_and_scaling():
    h = heating_rate(1e-15)
    ref = 4 * math.sqrt(math.pi) * const.PROTON_MASS * const.G * const.HBAR / (3 * const.K_B * 1e-45)
    assert h == pytest.approx(ref)
    assert 1e-5 <= h <= 1e-2
    assert heating_rate(2e-15) * 8 == pytest.approx(h, rel=1e-14)


def test_debye_waller():
    assert debye_waller_r0(8 * math.pi**2) == pytest.approx(const.ANGSTROM)
    assert debye_waller_r0(0.5) == pytest.approx(0.0796e-10, rel=1e-3)


def test_dipole_exact_by_change_of_variables():
    # u = x - y, v = x + y are independent N(0, 2); x.y = (|v|^2 - |u|^2)/4,
    # E[1/|u|] = 1/sqrt(pi), E|u| = 4/sqrt(pi), E|v|^2 = 6
    mean = (6 / math.sqrt(math.pi) - 4 / math.sqrt(math.pi)) / 4
    assert gaussian_dipole_exact(1.0) == pytest.approx((2 * math.pi) ** 3 * mean, rel=1e-14)


@pytest.mark.parametrize("r0", [1.0, 1e-10])
def test_dipole_mc_small_budget(r0):
    est = gaussian_dipole_integral(r0, MCConfig(samples=400_000, seed=5))
    exact = gaussian_dipole_exact(r0)
    assert abs(est.value - exact) <= 4 * est.error
    assert est.samples == 400_000


def test_dipole_mc_reproducible_and_scale_free():
    a = gaussian_dipole_integral(1.0, MCConfig(samples=100_000, seed=9))
    b = gaussian_dipole_integral(1e-10, MCConfig(samples=100_000, seed=9))
    assert b.value == pytest.approx(a.value * 1e-70, rel=1e-14)
    assert a == gaussian_dipole_integral(1.0, MCConfig(samples=100_000, seed=9))


def test_dipole_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        gaussian_dipole_integral(1.0, MCConfig(samples=1000, seed=1), rel_tol=1e-4)
    with pytest.raises(ValueError):
        gaussian_dipole_integral(1.0, MCConfig(samples=0))


def test_spectral_rate_roundtrip():
    r = SpectralRate(3.0, 2.0)
    back = r.per_energy().per_omega()
    assert back.value == pytest.approx(3.0) and back.at == pytest.approx(2.0)
