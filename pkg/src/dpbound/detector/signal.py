"""Expected collapse-photon counts for a multi-material detector setup."""

import math
from dataclasses import dataclass, field

from .. import constants as const
from ..errors import DomainMismatch
from .efficiency import EfficiencyCurve, inverse_energy_integral


@dataclass(frozen=True)
class Roi:
    e1: float = 1000.0  # keV
    e2: float = 3800.0

    def __post_init__(self):
        if not 0 < self.e1 < self.e2:
            raise ValueError("ROI needs 0 < e1 < e2")


@dataclass(frozen=True)
class AcquisitionConfig:
    live_time: float  # s
    roi: Roi = field(default_factory=Roi)
    e3: float = 1e5  # keV, top of the emission band

    def __post_init__(self):
        if not self.live_time > 0:
            raise ValueError("live_time must be positive")
        if self.e3 < self.roi.e2:
            raise ValueError("e3 must not lie below the ROI upper edge")

    @property
    def high_band(self):
        return (self.roi.e2, self.e3)


@dataclass(frozen=True)
class SetupComponent:
    material_id: str
    atomic_number: int
    n_atoms: float
    efficiency: EfficiencyCurve

    def __post_init__(self):
        if self.atomic_number < 1 or not self.n_atoms > 0:
            raise ValueError("atomic_number and n_atoms must be positive")

    @property
    def strength(self):
        """``N^2 N_a``: coherent-emission weight of this component."""
        return float(self.atomic_number) ** 2 * self.n_atoms


def n_atoms_from_mass(mass_kg, molar_mass_g):
    return mass_kg * 1e3 / molar_mass_g * const.AVOGADRO


def component_signal(comp, acq, method="auto"):
    e1, e2 = acq.roi.e1, acq.roi.e2
    if not comp.efficiency.covers(e1, e2):
        raise DomainMismatch(
            f"{comp.material_id}: efficiency domain {comp.efficiency.domain} does not cover ROI [{e1}, {e2}] keV"
        )
    return comp.strength * const.BETA * acq.live_time * inverse_energy_integral(comp.efficiency, e1, e2, method)


def signal_coefficient(components, acq, method="auto"):
    """``a`` (m^3) such that the expected detected signal is ``a / R0^3``."""
    return sum(component_signal(c, acq, method) for c in components)


def high_energy_coefficient(components, acq):
    """``b`` (m^3): photons generated (not detected) between ``e2`` and ``e3``."""
    e2, e3 = acq.high_band
    log_span = math.log(e3 / e2)
    return sum(c.strength * const.BETA * acq.live_time * log_span for c in components)


def compton_limit_coefficient(components, acq):
    """``f b`` when every high-band photon is detected at peak ROI efficiency."""
    e2, e3 = acq.high_band
    log_span = math.log(e3 / e2)
    total = 0.0
    for c in components:
        _, eps_max = c.efficiency.peak(acq.roi.e1, acq.roi.e2)
        total += eps_max * c.strength * const.BETA * acq.live_time * log_span
    return total


def improvement_factor(a, fb):
    """Bound inflation ``((a + fb) / a)^(1/3)`` from extra signal ``fb``."""
    if not a > 0:
        raise ValueError("a must be positive")
    if fb < 0:
        raise ValueError("fb must be non-negative")
    return ((a + fb) / a) ** (1.0 / 3.0)


@dataclass(frozen=True)
class BackgroundSource:
    mass: float  # kg
    activity: float  # Bq/kg
    n_generated: float
    n_detected: float

    def __post_init__(self):
        if not self.n_generated > 0:
            raise ValueError("n_generated must be positive")


def background_counts(sources, live_time, rounded=True):
    """Expected background counts ``sum m A T N_rec / N``.

    Rounding (half-to-even) is applied once, to the final sum.
    """
    total = math.fsum(
        s.mass * s.activity * live_time * s.n_detected / s.n_generated
        for s in (BackgroundSource(*x) if not isinstance(x, BackgroundSource) else x for x in sources)
    )
    return round(total) if rounded else total
