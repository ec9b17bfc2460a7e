"""Full reproduction run: every published number recomputed and checked."""

import math
import time
import warnings
from importlib.resources import files

import numpy as np

from . import constants as const
from .coverage import run_coverage
from .detector import improvement_factor, load_setup, signal_coefficient
from .emission import MCConfig, gaussian_dipole_exact, gaussian_dipole_integral, heating_rate
from .errors import RegimeViolation
from .inference import (
    PUBLISHED_COMPTON_COEFFICIENT,
    PUBLISHED_SIGNAL_COEFFICIENT,
    CountData,
    PriorSpec,
    lambda_quantile,
    r0_lower_bound,
)
from .selfenergy import (
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
from .special import reg_lower_gamma

PUBLISHED_CRYSTAL = dict(n_atoms=1e14, nucleus_mass=5e-26, lattice_constant=1e-10, r0=1e-14)


def _rel(x, ref):
    return abs(x / ref - 1.0)


def _timed(fn, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        out = fn()
    return out, (time.perf_counter() - t0) / repeat


def crystal_collapse():
    crystal = CrystalSpec(**PUBLISHED_CRYSTAL)
    res, dt = _timed(lambda: delta_e_crystal(crystal, 1e-13), repeat=200)
    ok = _rel(res.delta_e, 4.61e-32) < 0.01 and _rel(res.tau, 0.0023) < 0.01 and dt < 1e-3
    return {
        "delta_e_joule": res.delta_e,
        "tau_s": res.tau,
        "expected_delta_e_joule": 4.61e-32,
        "expected_tau_s": 0.0023,
        "tolerance_rel": 0.01,
        "runtime_s": dt,
        "passed": ok,
    }


def second_operating_point():
    crystal = CrystalSpec(**PUBLISHED_CRYSTAL)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeViolation)
        res = delta_e_crystal(crystal, 1e-14)
    return {
        "tau_s": res.tau,
        "expected_tau_s": 0.013,
        "tolerance_rel": 0.05,
        "regime_violation": res.regime_violation,
        "passed": _rel(res.tau, 0.013) < 0.05 and res.regime_violation,
    }


def headline_bound():
    res, dt = _timed(lambda: r0_lower_bound(PUBLISHED_SIGNAL_COEFFICIENT, CountData(), PriorSpec(), rounded=True))
    return {
        "lambda_bar": res.lambda_bar,
        "lambda_bar_rounded": res.lambda_bar_rounded,
        "r0_bound_m": res.r0_bound,
        "expected_lambda_bar": 617,
        "expected_r0_bound_m": 0.54e-10,
        "tolerance_rel": 0.01,
        "runtime_s": dt,
        "passed": res.lambda_bar_rounded == 617 and _rel(res.r0_bound, 0.54e-10) < 0.01 and dt < 0.01,
    }


def improvement():
    value = improvement_factor(PUBLISHED_SIGNAL_COEFFICIENT, PUBLISHED_COMPTON_COEFFICIENT)
    return {"improvement": value, "expected": 1.620, "tolerance_abs": 0.001, "passed": abs(value - 1.620) <= 0.001}


def dipole_integral(samples=10_000_000, seed=None):
    rows = []
    ok = True
    for r0 in (1.0, 1e-10):
        est, dt = _timed(lambda: gaussian_dipole_integral(r0, MCConfig(samples=samples, seed=seed)))
        exact = gaussian_dipole_exact(r0)
        sigmas = abs(est.value - exact) / est.error
        rel = _rel(est.value, exact)
        ok &= sigmas <= 3.0 and rel <= 0.01 and dt < 30.0
        rows.append({"r0": r0, "estimate": est.value, "error": est.error, "exact": exact,
                     "sigmas": sigmas, "rel_error": rel, "runtime_s": dt})
    return {"samples": samples, "cases": rows, "passed": bool(ok)}


def selfenergy_oracle(seed=None):
    sphere = MassSphere(5e-26, 1e-14)
    rows = []
    ok = True
    for f in (0.01, 2.0, 5.0, 10.0):
        d = f * sphere.r0
        analytic = delta_e_small_d(sphere, d) if f < 1 else delta_e_saturated(sphere, d)
        est = delta_e_numeric(sphere, d, QuadratureConfig(seed=seed))
        rel = _rel(est.value, analytic)
        ok &= rel < 0.02 and abs(est.value - analytic) <= 3.0 * est.error + 0.02 * analytic
        rows.append({"d_over_r0": f, "numeric_joule": est.value, "error_joule": est.error,
                     "analytic_joule": analytic, "rel_diff": rel})
    return {"tolerance_rel": 0.02, "cases": rows, "passed": bool(ok)}


def special_functions():
    xs = np.linspace(0.0, 50.0, 2001)
    p1 = max(abs(reg_lower_gamma(1.0, x) - (-math.expm1(-x))) for x in xs)
    worst = 0.0
    for s in (0.5, 1.0, 2.5, 10.0, 57.0, 577.0, 1500.0):
        for x in (0.1, 1.0, 5.0, 30.0, 300.0, 600.0, 1400.0):
            lhs = reg_lower_gamma(s + 1.0, x)
            rhs = reg_lower_gamma(s, x) - math.exp(s * math.log(x) - x - math.lgamma(s + 1.0))
            worst = max(worst, abs(lhs - rhs))
    q0 = lambda_quantile(0, math.inf, 0.95)
    q0_err = abs(q0 - math.log(20.0))
    return {
        "p1_max_abs_error": p1,
        "recurrence_max_abs_error": worst,
        "zero_count_quantile": q0,
        "zero_count_quantile_error": q0_err,
        "passed": p1 <= 1e-12 and worst <= 1e-10 and q0_err <= 1e-9,
    }


def lattice_sums():
    rows = []
    ok = True
    for n in range(2, 13):
        s = offdiag_sum_exact(n)
        chain = offdiag_sum_chain(n)
        ok &= s < chain
        rows.append({"n_per_side": n, "exact": s, "bound_chain": chain})
    crystal = CrystalSpec(**PUBLISHED_CRYSTAL)
    res = delta_e_crystal(crystal, 1e-13)
    ratio = res.offdiag_bound / res.delta_e
    ok &= ratio < 1e-6
    return {"cases": rows, "offdiag_bound_joule": res.offdiag_bound, "offdiag_to_diag_ratio": ratio,
            "passed": bool(ok)}


def coverage(replicas=500, seed=None, signal_counts=60.0, background=506.0):
    comps, acq = load_setup(files("dpbound") / "data" / "setup_synthetic.json")
    a = signal_coefficient(comps, acq)
    r0_true = (a / signal_counts) ** (1.0 / 3.0)
    res, dt = _timed(lambda: run_coverage(comps, acq, r0_true, background, replicas=replicas, seed=seed))
    return {
        "replicas": replicas,
        "a_m3": a,
        "r0_true_m": r0_true,
        "coverage": res.fraction,
        "expected_coverage": res.expected_coverage,
        "undefined": res.undefined,
        "threshold": 0.93,
        "runtime_s": dt,
        "passed": res.fraction >= 0.93 and dt < 60.0,
    }


def heating():
    r0 = 1e-15
    value = heating_rate(r0)
    scaling = heating_rate(2.0 * r0) * 8.0 / value
    return {
        "r0_m": r0,
        "heating_rate_k_per_s": value,
        "constant_k_m3_per_s": value * r0**3,
        "published_order_of_magnitude": 1e-4,
        "scaling_ratio": scaling,
        "passed": 1e-5 <= value <= 1e-2 and abs(scaling - 1.0) < 1e-12,
    }


def reproduction_report(dipole_samples=10_000_000, coverage_replicas=500, seed=None):
    criteria = {
        "crystal_collapse_time": crystal_collapse(),
        "second_operating_point": second_operating_point(),
        "headline_bound": headline_bound(),
        "improvement_factor": improvement(),
        "gaussian_dipole_integral": dipole_integral(dipole_samples, seed),
        "selfenergy_oracle": selfenergy_oracle(seed),
        "special_functions": special_functions(),
        "lattice_sum_bound": lattice_sums(),
        "simulator_coverage": coverage(coverage_replicas, seed),
        "heating_rate": heating(),
    }
    return {
        "constants": {"G": const.G, "hbar": const.HBAR, "beta_si": const.BETA},
        "criteria": criteria,
        "all_passed": all(c["passed"] for c in criteria.values()),
    }
