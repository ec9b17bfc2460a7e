"""Brute-force evaluation of the gravitational self-energy difference.

    dE(d) = -8 pi G  int int mu(r) [mu(r' + d) - mu(r')] / |r - r'| dr dr'

With ``x = r - r' - d`` separated out the double integral becomes
``8 pi G int [A(x) - A(x - d)] / |x| dx`` where ``A`` is the density
autocorrelation. Two routes evaluate it:

``mc``
    Importance-sample ``x`` with density proportional to ``1/|x|`` inside the
    ball of radius ``d + 2 R_support``. The kernel cancels exactly, so every
    weight is bounded. Samples are paired antithetically (``x`` and ``-x``),
    which removes the first-order term in ``d`` and keeps the small-``d``
    regime resolvable.
``quad``
    Average over directions first (shell theorem), leaving the 1-D integral
    ``4 pi int_0^d A(x) (x - x^2/d) dx`` for adaptive quadrature.
"""

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .. import constants as const
from .._rng import default_seed, split_counts, stream_generators
from ..errors import BudgetExceeded


@dataclass(frozen=True)
class QuadratureConfig:
    samples: int = 1_000_000
    rel_tol: float = 0.01
    seed: int | None = None
    streams: int = 16
    max_samples: int = 16_000_000
    method: str = "mc"

    def __post_init__(self):
        if self.samples <= 0 or self.max_samples <= 0 or self.streams <= 0:
            raise ValueError("quadrature budget must be positive")
        if self.method not in ("mc", "quad"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class Estimate:
    value: float
    error: float
    samples: int = 0

    @property
    def rel_error(self):
        return abs(self.error / self.value) if self.value else float("inf")


def _displacement_norm(d):
    d = np.atleast_1d(np.asarray(d, dtype=float))
    if d.size == 1:
        return abs(float(d[0]))
    if d.shape != (3,):
        raise ValueError("displacement must be a scalar or a 3-vector")
    return float(np.linalg.norm(d))


def _mc_stream(dens, d, L, n, rng, batch=250_000):
    """Sum and sum of squares of antithetic weights for one stream."""
    total = 0.0
    total2 = 0.0
    left = n
    w_scale = 2.0 * np.pi * L**2
    while left > 0:
        m = min(batch, left)
        left -= m
        rad = L * np.sqrt(rng.random(m))
        cos_t = 2.0 * rng.random(m) - 1.0
        sin_t = np.sqrt(np.maximum(0.0, 1.0 - cos_t**2))
        # d is along z; the azimuth drops out of every |x +- d|
        z = rad * cos_t
        rho = rad * sin_t
        plus = np.hypot(rho, z + d)
        minus = np.hypot(rho, z - d)
        a0 = dens.autocorrelation(rad)
        w = w_scale * (a0 - 0.5 * (dens.autocorrelation(minus) + dens.autocorrelation(plus)))
        total += float(w.sum())
        total2 += float((w * w).sum())
    return total, total2


def _mc(dens, d, cfg):
    seed = default_seed() if cfg.seed is None else cfg.seed
    L = d + 2.0 * dens.support_radius
    sums = []
    n_done = 0
    budget = cfg.samples
    offset = 0
    while True:
        gens = stream_generators(seed, cfg.streams, offset=offset)
        for rng, n in zip(gens, split_counts(budget, cfg.streams)):
            s, s2 = _mc_stream(dens, d, L, n, rng)
            sums.append((s, s2, n))
        offset += cfg.streams
        n_done += budget
        N = sum(n for _, _, n in sums)
        S = sum(s for s, _, _ in sums)
        S2 = sum(s2 for _, s2, _ in sums)
        mean = S / N
        var = max(S2 / N - mean**2, 0.0)
        est = Estimate(8.0 * np.pi * const.G * mean, 8.0 * np.pi * const.G * np.sqrt(var / N), N)
        if est.value == 0.0 or est.rel_error <= cfg.rel_tol:
            return est
        budget = min(n_done, cfg.max_samples - n_done)
        if budget <= 0:
            raise BudgetExceeded(
                f"relative error {est.rel_error:.3g} > {cfg.rel_tol} after {N} samples",
                value=est.value,
                error=est.error,
            )


def _quad(dens, d, cfg):
    Rs = dens.support_radius
    upper = min(d, 2.0 * Rs)
    pts = [p for p in (2.0 * Rs,) if 0.0 < p < upper]

    def f(x):
        return float(dens.autocorrelation(x)) * (x - x * x / d)

    val, err = integrate.quad(f, 0.0, upper, points=pts or None, epsrel=1e-10, epsabs=0.0, limit=500)
    scale = 8.0 * np.pi * const.G * 4.0 * np.pi
    est = Estimate(scale * val, scale * max(err, 1e-14 * abs(val)), 0)
    if est.value != 0.0 and est.rel_error > cfg.rel_tol:
        raise BudgetExceeded(f"quadrature error {est.rel_error:.3g} > {cfg.rel_tol}", est.value, est.error)
    return est


def delta_e_numeric(dens, d, quad=None):
    """Self-energy difference (J) of ``dens`` displaced by ``d`` (m).

    ``d`` may be a scalar distance or a 3-vector. Returns an
    :class:`Estimate` carrying the value and its one-sigma error (MC) or the
    quadrature error estimate.
    """
    cfg = quad or QuadratureConfig()
    dist = _displacement_norm(d)
    if dist == 0.0:
        return Estimate(0.0, 0.0, 0)
    if cfg.method == "quad":
        return _quad(dens, dist, cfg)
    return _mc(dens, dist, cfg)
