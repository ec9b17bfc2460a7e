"""Collapse-induced spontaneous photon emission and related closed forms."""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import constants as const
from ._rng import default_seed, split_counts, stream_generators
from .errors import BudgetExceeded, OutOfValidityBand

VALIDITY_BAND_KEV = (10.0, 1e5)
ELECTRON_R0_FLOOR = 5e-11  # m, Bohr-radius scale


@dataclass(frozen=True)
class EmitterSpec:
    """A block of ``n_atoms`` atoms with ``atomic_number`` protons each.

    ``r0_electron`` switches on the (normally negligible) electron term.
    """

    atomic_number: int
    n_atoms: float
    r0: float
    r0_electron: float | None = None

    def __post_init__(self):
        if self.atomic_number < 1 or self.n_atoms < 1:
            raise ValueError("atomic_number and n_atoms must be >= 1")
        if not self.r0 > 0:
            raise ValueError("r0 must be positive")
        if self.r0_electron is not None and self.r0_electron < ELECTRON_R0_FLOOR:
            raise ValueError(f"r0_electron below the {ELECTRON_R0_FLOOR:g} m floor")


@dataclass(frozen=True)
class SpectralRate:
    """Photons per second per unit angular frequency (``per='omega'``) or per J (``per='energy'``)."""

    value: float
    at: float
    per: str = "omega"

    def per_energy(self):
        if self.per == "energy":
            return self
        return SpectralRate(self.value / const.HBAR, self.at * const.HBAR, "energy")

    def per_omega(self):
        if self.per == "omega":
            return self
        return SpectralRate(self.value * const.HBAR, self.at / const.HBAR, "omega")


def beta_constant():
    """``(2/3) G e^2 / (pi^(3/2) eps0 c^3)`` in SI units (m^3/s)."""
    return const.BETA


def _check_band(omega):
    e_kev = omega * const.HBAR / const.KEV
    lo, hi = VALIDITY_BAND_KEV
    if not lo < e_kev < hi:
        warnings.warn(f"photon energy {e_kev:g} keV outside ({lo:g}, {hi:g}) keV", OutOfValidityBand, stacklevel=3)


def rate_per_omega(emitter, omega):
    if not omega > 0:
        raise ValueError("omega must be positive")
    _check_band(omega)
    if emitter.r0_electron is not None:
        per_atom = rate_per_atom_with_electrons(emitter.atomic_number, emitter.r0, emitter.r0_electron, omega)
        return SpectralRate(per_atom.value * emitter.n_atoms, omega)
    N = emitter.atomic_number
    value = const.BETA * N * N * emitter.n_atoms / (emitter.r0**3 * omega)
    return SpectralRate(value, omega)


def rate_per_energy(emitter, energy):
    """Emission rate per unit photon energy (photons s^-1 J^-1) at ``energy`` (J)."""
    return rate_per_omega(emitter, energy / const.HBAR).per_energy()


def rate_per_atom_with_electrons(N, r0, r0e, omega):
    if min(N, r0, r0e, omega) <= 0:
        raise ValueError("all arguments must be positive")
    value = const.BETA / omega * (N / r0e**3 + N * N / r0**3)
    return SpectralRate(value, omega)


def heating_rate(r0):
    """Collapse-induced heating rate (K/s) of a gas of free nucleons."""
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    return 4.0 * math.sqrt(math.pi) * const.NUCLEON_MASS * const.G * const.HBAR / (3.0 * const.K_B * r0**3)


def debye_waller_r0(b_angstrom2):
    """Mass-density width (m) from a Debye-Waller factor ``B`` in Angstrom^2."""
    if not b_angstrom2 > 0:
        raise ValueError("B must be positive")
    return math.sqrt(b_angstrom2 / (8.0 * math.pi**2)) * const.ANGSTROM


@dataclass(frozen=True)
class MCConfig:
    samples: int = 10_000_000
    seed: int | None = None
    streams: int = 10
    batch: int = 500_000


@dataclass(frozen=True)
class IntegralEstimate:
    value: float
    error: float
    samples: int

    @property
    def rel_error(self):
        return abs(self.error / self.value)


def _dipole_unit(cfg):
    """Dimensionless dipole integral for unit width, plus its MC error."""
    seed = default_seed() if cfg.seed is None else cfg.seed
    s = s2 = 0.0
    n_tot = 0
    for rng, n in zip(stream_generators(seed, cfg.streams), split_counts(cfg.samples, cfg.streams)):
        left = n
        while left > 0:
            m = min(cfg.batch, left)
            left -= m
            x = rng.standard_normal((m, 3))
            y = rng.standard_normal((m, 3))
            f = np.einsum("ij,ij->i", x, y) / np.linalg.norm(x - y, axis=1)
            s += float(f.sum())
            s2 += float((f * f).sum())
            n_tot += m
    mean = s / n_tot
    sd = math.sqrt(max(s2 / n_tot - mean * mean, 0.0) / n_tot)
    # x, y drawn from unit Gaussians: integral = (2 pi)^3 E[x.y / |x - y|]
    norm = (2.0 * math.pi) ** 3
    return norm * mean, norm * sd, n_tot


def gaussian_dipole_integral(r0, mc=None, rel_tol=None):
    """MC estimate of ``int int exp(-(x^2+y^2)/2 r0^2) x.y/|x-y| dx dy`` (m^7).

    Sampled in units of ``r0`` and rescaled by ``r0^7`` so physical widths
    never underflow.
    """
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    cfg = mc or MCConfig()
    if cfg.samples <= 0:
        raise ValueError("sample budget must be positive")
    val, err, n = _dipole_unit(cfg)
    scale = r0**7
    est = IntegralEstimate(val * scale, err * scale, n)
    if rel_tol is not None and est.rel_error > rel_tol:
        raise BudgetExceeded(f"relative error {est.rel_error:.3g} > {rel_tol}", est.value, est.error)
    return est


def gaussian_dipole_exact(r0):
    return 4.0 * math.pi**2.5 * r0**7
