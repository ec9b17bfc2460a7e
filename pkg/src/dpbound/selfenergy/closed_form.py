"""Closed-form self-energies and collapse times for spheres and crystals."""

import enum
import math
import warnings
from dataclasses import dataclass

from .. import constants as const
from ..errors import RegimeViolation
from .density import MassSphere
from .numeric import QuadratureConfig, delta_e_numeric

SMALL_D_LIMIT = 0.1  # in units of R0
SATURATED_LIMIT = 2.0


class Regime(str, enum.Enum):
    SMALL_D = "SmallD"
    SATURATED = "Saturated"
    NUMERICAL = "Numerical"


@dataclass(frozen=True)
class CrystalSpec:
    """Mono-atomic simple cubic crystal of ``n_atoms`` identical nuclei."""

    n_atoms: float
    nucleus_mass: float
    lattice_constant: float
    r0: float

    def __post_init__(self):
        if self.n_atoms < 1:
            raise ValueError("n_atoms must be >= 1")
        if min(self.nucleus_mass, self.lattice_constant, self.r0) <= 0:
            raise ValueError("crystal parameters must be positive")
        if self.lattice_constant <= 2.0 * self.r0:
            raise ValueError("lattice_constant must exceed 2*r0 (nuclei would overlap)")

    @property
    def nucleus(self):
        return MassSphere(self.nucleus_mass, self.r0)


@dataclass(frozen=True)
class SelfEnergyResult:
    delta_e: float
    tau: float
    regime: Regime
    error: float = 0.0
    offdiag_bound: float | None = None
    regime_violation: bool = False


def collapse_time(delta_e):
    """``hbar / delta_e``; ``inf`` when there is no energy difference."""
    if delta_e < 0:
        raise ValueError("delta_e must be non-negative")
    return math.inf if delta_e == 0 else const.HBAR / delta_e


def sphere_potential(r_prime, sphere):
    """``int mu(r) / |r - r'| dr`` for a uniform ball, in kg/m."""
    if r_prime < 0:
        raise ValueError("r_prime must be non-negative")
    m, R = sphere.mass, sphere.r0
    if r_prime <= R:
        return 1.5 * m / R**3 * (R * R - r_prime * r_prime / 3.0)
    return m / r_prime


def delta_e_small_d(sphere, d):
    return 4.0 * math.pi * const.G * sphere.mass**2 * d * d / sphere.r0**3


def delta_e_saturated(sphere, d):
    return 8.0 * math.pi * const.G * sphere.mass**2 / sphere.r0 * (1.2 - sphere.r0 / d)


def _result(delta_e, regime, **kw):
    return SelfEnergyResult(delta_e=delta_e, tau=collapse_time(delta_e), regime=regime, **kw)


def delta_e_sphere(sphere, d, quad=None):
    """Self-energy difference for a uniform sphere superposed at distance ``d``.

    Uses the small-displacement form for ``d <= 0.1 R0``, the saturated form
    for ``d >= 2 R0`` and numerical integration in between.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    R = sphere.r0
    if d <= SMALL_D_LIMIT * R:
        return _result(delta_e_small_d(sphere, d), Regime.SMALL_D)
    if d >= SATURATED_LIMIT * R:
        return _result(delta_e_saturated(sphere, d), Regime.SATURATED)
    est = delta_e_numeric(sphere, d, quad or QuadratureConfig())
    return _result(max(est.value, 0.0), Regime.NUMERICAL, error=est.error)


def delta_e_crystal(crystal, d):
    """Diagonal (same-nucleus) self-energy summed over the crystal.

    Off-diagonal terms are dropped; their size is bounded by
    :func:`offdiag_energy_bound` and reported alongside. Below ``d = 2 R0``
    the formula is applied anyway with a :class:`RegimeViolation` warning.
    """
    violated = d < SATURATED_LIMIT * crystal.r0
    if violated:
        warnings.warn(
            f"d={d:g} m is below 2*r0={2 * crystal.r0:g} m; saturated formula extrapolated",
            RegimeViolation,
            stacklevel=2,
        )
    de = crystal.n_atoms * delta_e_saturated(crystal.nucleus, d)
    from .lattice import offdiag_energy_bound

    return _result(
        de,
        Regime.SATURATED,
        offdiag_bound=offdiag_energy_bound(crystal, d),
        regime_violation=violated,
    )
