"""Gravitational self-energy differences and collapse times."""

from .closed_form import (
    CrystalSpec,
    Regime,
    SelfEnergyResult,
    collapse_time,
    delta_e_crystal,
    delta_e_saturated,
    delta_e_small_d,
    delta_e_sphere,
    sphere_potential,
)
from .density import GaussianDensity, MassSphere, TabulatedDensity, radial_fourier
from .kernel import decoherence_kernel, mass_fourier
from .lattice import (
    offdiag_energy_bound,
    offdiag_energy_prefactor,
    offdiag_sum_asymptotic,
    offdiag_sum_chain,
    offdiag_sum_exact,
)
from .numeric import Estimate, QuadratureConfig, delta_e_numeric

__all__ = [
    "CrystalSpec",
    "Estimate",
    "GaussianDensity",
    "MassSphere",
    "QuadratureConfig",
    "Regime",
    "SelfEnergyResult",
    "TabulatedDensity",
    "collapse_time",
    "decoherence_kernel",
    "delta_e_crystal",
    "delta_e_numeric",
    "delta_e_saturated",
    "delta_e_small_d",
    "delta_e_sphere",
    "mass_fourier",
    "offdiag_energy_bound",
    "offdiag_energy_prefactor",
    "offdiag_sum_asymptotic",
    "offdiag_sum_chain",
    "offdiag_sum_exact",
    "radial_fourier",
    "sphere_potential",
]
