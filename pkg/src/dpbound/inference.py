"""Bayesian lower bound on R0 from integral photon counts.

The measured count ``z_c`` is Poisson with mean ``Lambda_c = a/R0^3 + Lambda_b
+ 1`` (signal and background each carry the ``Lambda = z + 1`` convention).
A flat prior truncated at ``Lambda_max`` (from ``R0 >= r0_min``) gives a
truncated gamma posterior; its upper quantile caps the signal and hence
bounds ``R0`` from below.
"""

import math
import warnings
from dataclasses import dataclass

from .errors import BoundUndefined, NoConvergence
from .special import reg_lower_gamma

PUBLISHED_Z_C = 576
PUBLISHED_Z_B = 506
PUBLISHED_SIGNAL_COEFFICIENT = 1.756e-29  # m^3
PUBLISHED_COMPTON_COEFFICIENT = 5.712e-29  # m^3, all high-band photons at peak efficiency
POISSON_OFFSET = 1  # Lambda = z + 1 for each Poisson source


@dataclass(frozen=True)
class CountData:
    z_c: int = PUBLISHED_Z_C
    z_b: float = PUBLISHED_Z_B

    def __post_init__(self):
        if self.z_c < 0 or self.z_b < 0:
            raise ValueError("counts must be non-negative")


@dataclass(frozen=True)
class PriorSpec:
    r0_min: float = 1e-14
    credibility: float = 0.95

    def __post_init__(self):
        if not self.r0_min > 0:
            raise ValueError("r0_min must be positive")
        if not 0 < self.credibility < 1:
            raise ValueError("credibility must lie in (0, 1)")


@dataclass(frozen=True)
class BoundResult:
    lambda_bar: float
    lambda_bar_rounded: int
    lambda_b: float
    lambda_max: float
    r0_bound: float
    credibility: float
    rounded: bool


def expected_from_count(z):
    return z + POISSON_OFFSET


def lambda_max_for(a, z_b, r0_min):
    """Largest admissible ``Lambda_c``: signal at ``r0_min`` plus background."""
    return a / r0_min**3 + expected_from_count(z_b) + POISSON_OFFSET


def log_posterior_pdf(lam, z_c, lambda_max):
    if not lambda_max > 0:
        raise ValueError("lambda_max must be positive")
    if lam < 0 or lam > lambda_max:
        return -math.inf
    s = z_c + 1.0
    if lam == 0:
        return 0.0 - math.log(reg_lower_gamma(s, lambda_max)) if z_c == 0 else -math.inf
    log_norm = math.lgamma(s) + math.log(reg_lower_gamma(s, lambda_max))
    return z_c * math.log(lam) - lam - log_norm


def posterior_pdf(lam, z_c, lambda_max):
    """``lam^z_c e^-lam theta(lambda_max - lam) / gamma(z_c + 1, lambda_max)``."""
    return math.exp(log_posterior_pdf(lam, z_c, lambda_max))


def posterior_cdf(lam, z_c, lambda_max):
    """Posterior probability of ``Lambda_c <= lam``."""
    lam = min(max(lam, 0.0), lambda_max)
    s = z_c + 1.0
    return reg_lower_gamma(s, lam) / reg_lower_gamma(s, lambda_max)


def lambda_quantile(z_c, lambda_max, credibility, rel_tol=1e-10, max_iter=200):
    """Solve ``posterior_cdf(L) = credibility`` for ``L`` by bisection."""
    if not 0 < credibility < 1:
        raise ValueError("credibility must lie in (0, 1)")
    if not lambda_max > 0:
        raise ValueError("lambda_max must be positive")
    lo, hi = 0.0, float(lambda_max)
    if math.isinf(hi):
        # untruncated posterior: grow a finite bracket first
        hi = z_c + 2.0
        while posterior_cdf(hi, z_c, lambda_max) < credibility:
            hi *= 2.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if posterior_cdf(mid, z_c, lambda_max) < credibility:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rel_tol * hi:
            return 0.5 * (lo + hi)
    raise NoConvergence(f"bisection did not converge in {max_iter} iterations")


def r0_lower_bound(a, data=None, prior=None, rounded=False):
    """Credible lower bound on R0 (m) for signal coefficient ``a`` (m^3).

    With ``rounded=True`` the quantile is rounded to the nearest integer
    before entering the bound, reproducing the published arithmetic
    (617 -> denominator 616 - Lambda_b).
    """
    data = data or CountData()
    prior = prior or PriorSpec()
    if a < 0:
        raise ValueError("a must be non-negative")
    lambda_b = expected_from_count(data.z_b)
    lam_max = lambda_max_for(a, data.z_b, prior.r0_min)
    lam_bar = lambda_quantile(data.z_c, lam_max, prior.credibility)
    lam_int = int(round(lam_bar))
    used = lam_int if rounded else lam_bar
    room = used - POISSON_OFFSET - lambda_b
    if a == 0:
        warnings.warn("a = 0: no signal expected, R0 is unconstrained", stacklevel=2)
        r0 = 0.0
    elif room <= 0:
        raise BoundUndefined(
            f"posterior quantile {used:g} leaves no room above Lambda_b + 1 = {lambda_b + POISSON_OFFSET:g}"
        )
    else:
        r0 = (a / room) ** (1.0 / 3.0)
    return BoundResult(
        lambda_bar=lam_bar,
        lambda_bar_rounded=lam_int,
        lambda_b=lambda_b,
        lambda_max=lam_max,
        r0_bound=r0,
        credibility=prior.credibility,
        rounded=rounded,
    )
